// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "fixtures.hpp"

#include "pktsched/core.hpp"
#include "pktsched/experiment.hpp"
#include "pktsched/format.hpp"
#include "pktsched/lap.hpp"
#include "pktsched/offline_opt.hpp"
#include "pktsched/online.hpp"
#include "pktsched/perturbation.hpp"
#include "pktsched/prediction.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace pktsched;
using namespace pktsched::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const Instance& inst) {
    std::ostringstream out;
    out << "{";
    for (const auto& j : inst.jobs())
        out << "(" << j.id.value << ":" << j.release << "," << j.deadline << "," << format_number(j.weight) << ")";
    out << "}";
    return out.str();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

const char* kPolicies[] = {"greedy", "edf", "edf-alpha:0.5", "mg"};

/// Lowest evaluated local ratio across every LAP trace produced below.
struct LocalRatioFloor {
    double lowest = std::numeric_limits<double>::infinity();
    std::size_t evaluated = 0;
    std::string witness;

    void observe(const LapTrace& trace, const Instance& real, const Instance& pred) {
        for (const auto& slot : trace.slots) {
            if (!slot.local_ratio) continue;
            ++evaluated;
            if (*slot.local_ratio < lowest) {
                lowest = *slot.local_ratio;
                std::ostringstream w;
                w << "ratio " << format_number(lowest) << " at t=" << slot.t << " on J=" << describe(real)
                  << " Jhat=" << describe(pred);
                witness = w.str();
            }
        }
    }
};

LocalRatioFloor g_floor;

Outcome oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937_64 rng(1001);
    std::size_t mismatches = 0;
    std::string first;
    for (int i = 0; i < 500; ++i) {
        const Instance inst = random_instance(rng, {8, 8, false});
        const double fast = opt_schedule(inst).weight();
        const double slow = brute_force_opt(inst).weight;
        if (fast != slow) {
            if (!mismatches++) first = describe(inst);
        }
    }
    const double elapsed = seconds_since(start);
    Outcome out;
    out.pass = mismatches == 0 && elapsed < 30.0;
    out.detail = "500 instances, " + std::to_string(mismatches) + " mismatches, " + format_number(elapsed) + " s";
    if (!first.empty()) out.detail += ", first " + first;
    return out;
}

Outcome lower_bound_fixture() {
    const Instance j1 = lower_bound_j1();
    const Instance j2 = lower_bound_j2();
    const double opt = brute_force_opt(j2).weight;
    const Schedule blind = blind_follow(j1, j2);
    const double ratio = competitive_ratio(j2, blind);
    Outcome out;
    out.pass = opt == 1.999 && blind.weight() == 1.01 && std::abs(ratio - 1.9792) <= 1e-4 &&
               std::abs(ratio - 1.999 / 1.01) <= 1e-6;
    out.detail = "OPT(J2)=" + format_number(opt) + ", blind weight=" + format_number(blind.weight()) +
                 ", ratio=" + format_number(ratio);
    return out;
}

Outcome consistency() {
    std::mt19937_64 rng(1003);
    std::size_t runs = 0, wrong_weight = 0, stray_switches = 0;
    std::string first;
    for (int i = 0; i < 200; ++i) {
        const Instance inst = random_instance(rng, {10, 10, false});
        const double opt = brute_force_opt(inst).weight;
        for (double rho : {1.0, 1.1, 2.0}) {
            for (const char* name : kPolicies) {
                const LapResult run = lap_run(inst, inst, rho, OnlinePolicy::parse(name));
                g_floor.observe(run.trace, inst, inst);
                ++runs;
                if (run.schedule.weight() != opt) {
                    if (!wrong_weight++ && first.empty()) first = describe(inst);
                }
                for (const auto& slot : run.trace.slots)
                    if (slot.source == ChoiceSource::Online && slot.local_ratio) {
                        if (!stray_switches++ && first.empty()) first = describe(inst);
                    }
            }
        }
    }
    Outcome out;
    out.pass = wrong_weight == 0 && stray_switches == 0;
    out.detail = std::to_string(runs) + " runs, " + std::to_string(wrong_weight) + " below OPT, " +
                 std::to_string(stray_switches) + " online slots with an available predicted job";
    if (!first.empty()) out.detail += ", first " + first;
    return out;
}

Outcome smoothness() {
    std::mt19937_64 rng(1004);
    const RandomShape shape{8, 8, false};
    std::size_t qualifying = 0, violations = 0;
    std::string first;
    for (int i = 0; i < 3000; ++i) {
        Instance real = random_instance(rng, shape);
        Instance pred = random_prediction(rng, real, shape);
        align_horizons(real, pred);
        const double eta = prediction_error(real, pred);
        if (!std::isfinite(eta)) continue;
        const double opt = brute_force_opt(real).weight;
        for (double rho : {1.1, 1.5, 2.0, 3.0}) {
            if (eta > rho) continue;
            for (const char* name : kPolicies) {
                const LapResult run = lap_run(pred, real, rho, OnlinePolicy::parse(name));
                g_floor.observe(run.trace, real, pred);
                bool all_passed = true;
                for (const auto& slot : run.trace.slots)
                    if (slot.local_ratio && *slot.local_ratio > rho) all_passed = false;
                if (!all_passed) continue;
                ++qualifying;
                if (opt > eta * run.schedule.weight() + 1e-9) {
                    if (!violations++) first = describe(real) + " vs " + describe(pred);
                }
            }
        }
    }
    Outcome out;
    out.pass = violations == 0 && qualifying >= 1000;
    out.detail = std::to_string(qualifying) + " qualifying runs, " + std::to_string(violations) + " violations";
    if (!first.empty()) out.detail += ", first " + first;
    return out;
}

Outcome robustness() {
    std::mt19937_64 rng(1005);
    const RandomShape shape{8, 8, true};
    const double rho = 1.1;
    const double greedy_bound = rho + 2.0 + 1.0;
    const double mg_bound = rho + std::numbers::phi + 1.0;
    double worst_greedy = 1.0, worst_mg = 1.0;
    std::size_t hostile = 0;
    std::string first;
    for (int i = 0; i < 500; ++i) {
        Instance real = random_instance(rng, shape);
        Instance pred = random_prediction(rng, real, shape);
        align_horizons(real, pred);
        if (!std::isfinite(prediction_error(real, pred)) || prediction_error(real, pred) > rho) ++hostile;
        const double opt = brute_force_opt(real).weight;
        const LapResult g = lap_run(pred, real, rho, OnlinePolicy::greedy());
        const LapResult m = lap_run(pred, real, rho, OnlinePolicy::modified_greedy());
        g_floor.observe(g.trace, real, pred);
        g_floor.observe(m.trace, real, pred);
        const double rg = weight_ratio(opt, g.schedule.weight());
        const double rm = weight_ratio(opt, m.schedule.weight());
        if ((rg > greedy_bound + 1e-9 || rm > mg_bound + 1e-9) && first.empty())
            first = describe(real) + " vs " + describe(pred);
        worst_greedy = std::max(worst_greedy, rg);
        worst_mg = std::max(worst_mg, rm);
    }
    Outcome out;
    out.pass = worst_greedy <= greedy_bound + 1e-9 && worst_mg <= mg_bound + 1e-9;
    out.detail = "500 pairs (" + std::to_string(hostile) + " with eta > rho), worst greedy-fallback ratio " +
                 format_number(worst_greedy) + " <= " + format_number(greedy_bound) + ", worst mg-fallback ratio " +
                 format_number(worst_mg) + " <= " + format_number(mg_bound);
    if (!first.empty()) out.detail += ", first violation " + first;
    return out;
}

Outcome prefix_dominance() {
    std::mt19937_64 rng(1007);
    std::size_t checks = 0, violations = 0;
    std::string first;
    for (int i = 0; i < 500; ++i) {
        const Instance inst = random_instance(rng, {8, 8, false});
        const Schedule opt = opt_schedule(inst);
        const PrefixOptSeries series = prefix_opt_series(inst);
        for (Slot t = 0; t <= inst.horizon(); ++t) {
            ++checks;
            if (!(opt.weight(t) >= series.at(t))) {
                if (!violations++) first = describe(inst) + " at t=" + std::to_string(t);
            }
        }
    }
    Outcome out;
    out.pass = violations == 0;
    out.detail = std::to_string(checks) + " (instance, t) checks, " + std::to_string(violations) + " violations";
    if (!first.empty()) out.detail += ", first " + first;
    return out;
}

Outcome benchmark_competitiveness() {
    std::mt19937_64 rng(1008);
    double worst_greedy = 1.0, worst_mg = 1.0;
    for (int i = 0; i < 500; ++i) {
        const Instance inst = random_instance(rng, {8, 8, true});
        const double opt = brute_force_opt(inst).weight;
        worst_greedy = std::max(worst_greedy, weight_ratio(opt, run_online(OnlinePolicy::greedy(), inst).weight()));
        worst_mg =
            std::max(worst_mg, weight_ratio(opt, run_online(OnlinePolicy::modified_greedy(), inst).weight()));
    }
    Outcome out;
    out.pass = worst_greedy <= 2.0 + 1e-9 && worst_mg <= std::numbers::phi + 1e-9;
    out.detail = "500 agreeable instances, worst greedy " + format_number(worst_greedy) + ", worst mg " +
                 format_number(worst_mg);
    return out;
}

ExperimentConfig sigma_sweep_config() {
    ExperimentConfig config;
    config.dataset = Dataset::Uniform;
    config.sweep = SweepVariable::WeightSigma;
    config.values = parse_sweep_values("0:0.05:0.5");
    config.trials = 10;
    config.algorithms = {"lap", "greedy", "edf", "edf-alpha", "mg"};
    config.seed = 2024;
    return config;
}

ExperimentConfig k_sweep_config() {
    ExperimentConfig config = sigma_sweep_config();
    config.sweep = SweepVariable::DeadlineShift;
    config.values = parse_sweep_values("0:1:6");
    return config;
}

std::vector<double> lap_means(const ExperimentResult& result) {
    std::vector<double> means;
    for (const auto& p : result.series)
        if (p.algorithm == "lap") means.push_back(p.mean_ratio);
    return means;
}

double mean_of(const ExperimentResult& result, double value, const std::string& algorithm) {
    for (const auto& p : result.series)
        if (p.sweep_value == value && p.algorithm == algorithm) return p.mean_ratio;
    return std::numeric_limits<double>::quiet_NaN();
}

Outcome experiment_shape() {
    const auto start = Clock::now();
    const ExperimentConfig sigma_config = sigma_sweep_config();
    const ExperimentResult sigma = run_experiment(sigma_config);
    const ExperimentResult k = run_experiment(k_sweep_config());
    const double elapsed = seconds_since(start);

    const double bound = sigma_config.rho() + std::numbers::phi + 1.0;
    const auto sigma_lap = lap_means(sigma);
    const auto k_lap = lap_means(k);

    bool ok = true;
    std::ostringstream detail;
    const double at_zero = sigma_lap.front();
    if (std::abs(at_zero - 1.0) > 1e-9) ok = false;
    detail << "lap mean at sigma=0 " << format_number(at_zero);

    const double first_noisy = sigma_config.values[1];
    const double lap_first = mean_of(sigma, first_noisy, "lap");
    detail << "; at sigma=" << format_number(first_noisy) << " lap " << format_number(lap_first);
    for (const char* bench : {"greedy", "edf", "edf-alpha", "mg"}) {
        const double m = mean_of(sigma, first_noisy, bench);
        detail << ", " << bench << " " << format_number(m);
        if (!(lap_first < m)) ok = false;
    }
    double worst = 0.0;
    for (double m : sigma_lap) worst = std::max(worst, m);
    if (worst > bound) ok = false;
    detail << "; max lap mean " << format_number(worst) << " <= " << format_number(bound);

    detail << "; k-sweep lap means";
    for (std::size_t i = 0; i < k_lap.size(); ++i) {
        detail << ' ' << format_number(std::round(k_lap[i] * 1e4) / 1e4);
        if (i > 0 && k_lap[i] < k_lap[i - 1] - 0.02) ok = false;
    }
    if (elapsed >= 300.0) ok = false;
    detail << "; " << format_number(std::round(elapsed * 100) / 100) << " s";
    return {ok, detail.str()};
}

std::string experiment_bytes(ExperimentConfig config, unsigned threads) {
    config.threads = threads;
    const ExperimentResult result = run_experiment(config);
    std::ostringstream out;
    write_results_csv(out, result.records);
    write_series_csv(out, result.series);
    return out.str();
}

std::string suite_bytes() {
    // A compact rerun of the random suites rendered as CSV rows.
    std::ostringstream out;
    std::mt19937_64 rng(1010);
    const RandomShape shape{8, 8, true};
    for (int i = 0; i < 200; ++i) {
        Instance real = random_instance(rng, shape);
        Instance pred = random_prediction(rng, real, shape);
        align_horizons(real, pred);
        const LapResult run = lap_run(pred, real, 1.1, OnlinePolicy::modified_greedy());
        out << i << ',' << format_number(opt_weight(real)) << ',' << format_number(prediction_error(real, pred)) << ','
            << format_number(run.schedule.weight()) << '\n';
        write_trace_csv(out, run.trace);
    }
    return out.str();
}

Outcome determinism() {
    const bool suites = suite_bytes() == suite_bytes();
    const bool sigma = experiment_bytes(sigma_sweep_config(), 1) == experiment_bytes(sigma_sweep_config(), 0);
    ExperimentConfig powerlaw = k_sweep_config();
    powerlaw.dataset = Dataset::PowerLaw;
    powerlaw.generator.kind = PowerLawArrivals{};
    powerlaw.trials = 4;
    const bool k = experiment_bytes(powerlaw, 1) == experiment_bytes(powerlaw, 3);
    Outcome out;
    out.pass = suites && sigma && k;
    out.detail = std::string("random suites ") + (suites ? "identical" : "DIFFER") + ", sigma sweep (1 vs all threads) " +
                 (sigma ? "identical" : "DIFFER") + ", power-law k sweep (1 vs 3 threads) " +
                 (k ? "identical" : "DIFFER");
    return out;
}

Outcome local_ratio_floor() {
    // Extra traces on generated instances under weight noise.
    ExperimentConfig config = sigma_sweep_config();
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
        GeneratorSpec spec = config.generator;
        spec.seed = 500 + trial;
        const Instance real = generate(spec);
        for (double sigma : {0.0, 0.1, 0.5}) {
            Instance pred = perturb(real, {WeightGaussian{sigma}, 900 + trial});
            Instance aligned = real;
            align_horizons(aligned, pred);
            g_floor.observe(lap_run(pred, aligned, 1.1, OnlinePolicy::modified_greedy()).trace, aligned, pred);
        }
    }
    Outcome out;
    out.pass = g_floor.lowest >= 1.0 - 1e-9;
    out.detail = std::to_string(g_floor.evaluated) + " evaluated local tests, lowest " + format_number(g_floor.lowest);
    if (!out.pass) out.detail += "; witness " + g_floor.witness;
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<Outcome()> check;
    };
    // Criterion 6 inspects the traces gathered by 3, 4 and 5, so it runs after them.
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence", oracle_equivalence},
        {2, "lower-bound fixture", lower_bound_fixture},
        {3, "1-consistency", consistency},
        {4, "smoothness", smoothness},
        {5, "robustness", robustness},
        {6, "local-test floor", local_ratio_floor},
        {7, "prefix-OPT dominance", prefix_dominance},
        {8, "benchmark competitiveness", benchmark_competitiveness},
        {9, "experiment shape", experiment_shape},
        {10, "determinism", determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& error) {
            outcome = {false, std::string("exception: ") + error.what()};
        }
        failures += !outcome.pass;
        std::cout << "criterion " << c.number << " " << (outcome.pass ? "PASS" : "FAIL") << " " << c.name << ": "
                  << outcome.detail << std::endl;
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
