#pragma once

#include "pktsched/generators.hpp"
#include "pktsched/instance.hpp"
#include "pktsched/schedule.hpp"
#include "pktsched/snap_ingest.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace pktsched {

/// W(OPT(instance)) / W(schedule) with 0/0 = 1 and x/0 = +inf.
/// Throws InvalidSchedule when the schedule does not fit the instance.
double competitive_ratio(const Instance& instance, const Schedule& schedule);
double competitive_ratio(double optimal_weight, const Instance& instance, const Schedule& schedule);

enum class Dataset { Uniform, PowerLaw, Snap };
enum class SweepVariable { WeightSigma, DeadlineShift };

const char* to_string(Dataset dataset) noexcept;
const char* to_string(SweepVariable sweep) noexcept;

struct ExperimentConfig {
    Dataset dataset = Dataset::Uniform;
    SweepVariable sweep = SweepVariable::WeightSigma;
    std::vector<double> values{0.0};
    std::size_t trials = 10;  // ignored for SNAP data: one trial per qualifying day
    /// Roster tokens: lap, lap:<policy>, blind, greedy, edf, edf-alpha, edf-alpha:<a>, mg.
    std::vector<std::string> algorithms{"lap", "mg", "greedy", "edf", "edf-alpha"};
    double rho_excess = 0.1;      // LAP runs with rho = 1 + rho_excess
    double alpha = 0.5;           // for a bare "edf-alpha"
    std::string lap_fallback = "mg";
    std::uint64_t seed = 1;
    std::filesystem::path out_dir = "results";
    unsigned threads = 0;         // 0: hardware concurrency

    GeneratorSpec generator;      // arrivals, horizon, attributes (seed is ignored)
    std::filesystem::path snap_path;
    SnapIngestOptions snap;

    double rho() const noexcept { return 1.0 + rho_excess; }
};

/// Flat "key = value" text, '#' comments. Keys: dataset (uniform | powerlaw |
/// snap), sweep (sigma | k), values ("0,0.1,0.2" or "lo:step:hi"), trials,
/// algorithms, rho_excess, alpha, lap_fallback, seed, out_dir, threads,
/// horizon, lo, hi, a, M, weight_lo, weight_hi, slack_min, slack_max,
/// snap_path, snap_column, slots_per_day, min_events, max_events.
/// Throws ConfigError.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig parse_experiment_config(const std::filesystem::path& path);

/// Parses "a,b,c" or an inclusive "lo:step:hi" range.
std::vector<double> parse_sweep_values(const std::string& text);

struct ResultRecord {
    std::string dataset;
    std::size_t trial = 0;
    std::string algorithm;
    SweepVariable sweep = SweepVariable::WeightSigma;
    double sweep_value = 0.0;
    double eta = 1.0;
    double ratio = 1.0;
    double runtime_us = 0.0;
};

struct SeriesPoint {
    double sweep_value = 0.0;
    std::string algorithm;
    double mean_ratio = 0.0;
    double stderr_ratio = 0.0;
    std::size_t count = 0;
};

struct ExperimentResult {
    std::vector<ResultRecord> records;  // sweep value, then trial, then roster order
    std::vector<SeriesPoint> series;    // sweep value, then roster order
};

/// Runs every roster algorithm on every (sweep value, trial) pair.
///
/// Each trial's realization is drawn once, from derive_seed(seed, {0, trial}),
/// and shared across the sweep; the prediction for sweep index s comes from
/// derive_seed(seed, {1, s, trial}). Trials may run on several threads; the
/// records do not depend on the thread count.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Per-algorithm mean and standard error of the ratio per sweep value.
std::vector<SeriesPoint> summarize(const std::vector<ResultRecord>& records, const std::vector<std::string>& roster);

void write_results_csv(std::ostream& out, const std::vector<ResultRecord>& records);
void write_series_csv(std::ostream& out, const std::vector<SeriesPoint>& series);
void write_timings_csv(std::ostream& out, const std::vector<ResultRecord>& records);

/// results.csv, series.csv, timings.csv and metadata.txt under config.out_dir.
/// Only timings.csv carries wall-clock data.
void write_experiment_outputs(const ExperimentConfig& config, const ExperimentResult& result);

} // namespace pktsched
