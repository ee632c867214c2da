#include "pktsched/experiment.hpp"

#include "pktsched/core.hpp"
#include "pktsched/errors.hpp"
#include "pktsched/format.hpp"
#include "pktsched/lap.hpp"
#include "pktsched/offline_opt.hpp"
#include "pktsched/online.hpp"
#include "pktsched/perturbation.hpp"
#include "pktsched/prediction.hpp"
#include "pktsched/seeding.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace pktsched {

double competitive_ratio(double optimal_weight, const Instance& instance, const Schedule& schedule) {
    const auto check = validate_schedule(instance, schedule);
    if (!check) throw InvalidSchedule(check.violations.front());
    return weight_ratio(optimal_weight, schedule.weight());
}

double competitive_ratio(const Instance& instance, const Schedule& schedule) {
    return competitive_ratio(opt_weight(instance), instance, schedule);
}

const char* to_string(Dataset dataset) noexcept {
    switch (dataset) {
    case Dataset::Uniform: return "uniform";
    case Dataset::PowerLaw: return "powerlaw";
    case Dataset::Snap: return "snap";
    }
    return "?";
}

const char* to_string(SweepVariable sweep) noexcept {
    return sweep == SweepVariable::WeightSigma ? "sigma" : "k";
}

namespace {

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, separator)) {
        part = trim(part);
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("bad value for " + key + ": '" + text + "'");
    return value;
}

// Range endpoints are rounded to 12 significant digits so "0:0.05:0.5"
// yields 0.15 rather than 0.15000000000000002.
double tidy(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

/// One roster entry resolved to something runnable.
struct Algorithm {
    enum class Kind { Lap, Blind, Online } kind;
    std::string name;
    std::optional<OnlinePolicy> policy;
};

Algorithm resolve_algorithm(const std::string& token, const ExperimentConfig& config) {
    if (token == "lap") return {Algorithm::Kind::Lap, token, OnlinePolicy::parse(config.lap_fallback)};
    if (token.starts_with("lap:")) return {Algorithm::Kind::Lap, token, OnlinePolicy::parse(token.substr(4))};
    if (token == "blind") return {Algorithm::Kind::Blind, token, std::nullopt};
    if (token == "edf-alpha") return {Algorithm::Kind::Online, token, OnlinePolicy::edf_alpha(config.alpha)};
    try {
        return {Algorithm::Kind::Online, token, OnlinePolicy::parse(token)};
    } catch (const InvalidPolicy& error) {
        throw ConfigError("unknown algorithm '" + token + "'");
    }
}

PerturbationSpec perturbation_for(const ExperimentConfig& config, double value, std::uint64_t seed) {
    PerturbationSpec spec;
    spec.seed = seed;
    if (config.sweep == SweepVariable::WeightSigma) {
        spec.kind = WeightGaussian{value};
    } else {
        const double rounded = std::round(value);
        if (rounded != value || value < 0) throw ConfigError("deadline shifts must be nonnegative integers");
        spec.kind = DeadlineShift{static_cast<Slot>(rounded)};
    }
    return spec;
}

double elapsed_us(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::vector<double> parse_sweep_values(const std::string& text) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw ConfigError("range must be lo:step:hi");
        const double lo = parse_value<double>("values", parts[0]);
        const double step = parse_value<double>("values", parts[1]);
        const double hi = parse_value<double>("values", parts[2]);
        if (!(step > 0.0) || hi < lo) throw ConfigError("range needs step > 0 and lo <= hi");
        const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) values.push_back(tidy(lo + static_cast<double>(i) * step));
    } else {
        for (const auto& part : split(text, ',')) values.push_back(parse_value<double>("values", part));
    }
    if (values.empty()) throw ConfigError("no sweep values");
    return values;
}

ExperimentConfig parse_experiment_config(std::istream& in) {
    ExperimentConfig config;
    std::optional<UniformArrivals> uniform;
    std::optional<PowerLawArrivals> powerlaw;
    auto uniform_arrivals = [&]() -> UniformArrivals& {
        if (!uniform) uniform.emplace();
        return *uniform;
    };
    auto powerlaw_arrivals = [&]() -> PowerLawArrivals& {
        if (!powerlaw) powerlaw.emplace();
        return *powerlaw;
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "dataset") {
            if (value == "uniform") config.dataset = Dataset::Uniform;
            else if (value == "powerlaw") config.dataset = Dataset::PowerLaw;
            else if (value == "snap") config.dataset = Dataset::Snap;
            else throw ConfigError("unknown dataset '" + value + "'");
        } else if (key == "sweep") {
            if (value == "sigma") config.sweep = SweepVariable::WeightSigma;
            else if (value == "k") config.sweep = SweepVariable::DeadlineShift;
            else throw ConfigError("unknown sweep '" + value + "' (sigma|k)");
        } else if (key == "values") {
            config.values = parse_sweep_values(value);
        } else if (key == "trials") {
            config.trials = parse_value<std::size_t>(key, value);
        } else if (key == "algorithms") {
            config.algorithms = split(value, ',');
        } else if (key == "rho_excess") {
            config.rho_excess = parse_value<double>(key, value);
        } else if (key == "alpha") {
            config.alpha = parse_value<double>(key, value);
        } else if (key == "lap_fallback") {
            config.lap_fallback = value;
        } else if (key == "seed") {
            config.seed = parse_value<std::uint64_t>(key, value);
        } else if (key == "out_dir") {
            config.out_dir = value;
        } else if (key == "threads") {
            config.threads = parse_value<unsigned>(key, value);
        } else if (key == "horizon") {
            config.generator.horizon = parse_value<Slot>(key, value);
        } else if (key == "lo") {
            uniform_arrivals().lo = parse_value<int>(key, value);
        } else if (key == "hi") {
            uniform_arrivals().hi = parse_value<int>(key, value);
        } else if (key == "a") {
            powerlaw_arrivals().a = parse_value<double>(key, value);
        } else if (key == "M") {
            powerlaw_arrivals().M = parse_value<double>(key, value);
        } else if (key == "weight_lo") {
            config.generator.attributes.weight_lo = parse_value<double>(key, value);
        } else if (key == "weight_hi") {
            config.generator.attributes.weight_hi = parse_value<double>(key, value);
        } else if (key == "slack_min") {
            config.generator.attributes.slack_min = parse_value<Slot>(key, value);
        } else if (key == "slack_max") {
            config.generator.attributes.slack_max = parse_value<Slot>(key, value);
        } else if (key == "snap_path") {
            config.snap_path = value;
        } else if (key == "snap_column") {
            config.snap.timestamp_column = parse_value<std::size_t>(key, value);
        } else if (key == "slots_per_day") {
            config.snap.slots_per_day = parse_value<Slot>(key, value);
        } else if (key == "min_events") {
            config.snap.min_events = parse_value<std::size_t>(key, value);
        } else if (key == "max_events") {
            config.snap.max_events = parse_value<std::size_t>(key, value);
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    if (config.dataset == Dataset::PowerLaw) config.generator.kind = powerlaw.value_or(PowerLawArrivals{});
    else config.generator.kind = uniform.value_or(UniformArrivals{});
    config.snap.attributes = config.generator.attributes;
    if (config.dataset == Dataset::Snap && config.snap_path.empty()) throw ConfigError("dataset snap needs snap_path");
    if (config.rho_excess < 0.0) throw ConfigError("rho_excess must be nonnegative");
    if (config.algorithms.empty()) throw ConfigError("empty algorithm roster");
    return config;
}

ExperimentConfig parse_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    return parse_experiment_config(in);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    std::vector<Algorithm> roster;
    for (const auto& token : config.algorithms) roster.push_back(resolve_algorithm(token, config));
    if (!(config.rho() >= 1.0)) throw ConfigError("rho must be at least 1");

    std::vector<Instance> snap_days;
    if (config.dataset == Dataset::Snap) {
        SnapIngestOptions options = config.snap;
        options.seed = derive_seed(config.seed, {2});
        for (auto& day : ingest_snap_events(config.snap_path, options)) snap_days.push_back(std::move(day.instance));
    }
    const std::size_t trials = config.dataset == Dataset::Snap ? snap_days.size() : config.trials;
    const std::size_t sweeps = config.values.size();
    const std::string dataset = to_string(config.dataset);

    // records[(s * trials + trial) * roster + a]
    std::vector<ResultRecord> records(sweeps * trials * roster.size());

    auto run_trial = [&](std::size_t trial) {
        Instance realization;
        if (config.dataset == Dataset::Snap) {
            realization = snap_days[trial];
        } else {
            GeneratorSpec spec = config.generator;
            spec.seed = derive_seed(config.seed, {0, trial});
            realization = generate(spec);
        }
        const double optimum = opt_weight(realization);
        const PrefixOptSeries series = prefix_opt_series(realization);

        // Prediction-free algorithms do not depend on the sweep.
        std::vector<std::optional<std::pair<double, double>>> fixed(roster.size());
        for (std::size_t a = 0; a < roster.size(); ++a) {
            if (roster[a].kind != Algorithm::Kind::Online) continue;
            const auto start = std::chrono::steady_clock::now();
            const Schedule schedule = run_online(*roster[a].policy, realization);
            const double runtime = elapsed_us(start);
            fixed[a] = {competitive_ratio(optimum, realization, schedule), runtime};
        }

        for (std::size_t s = 0; s < sweeps; ++s) {
            const double value = config.values[s];
            const Instance prediction =
                perturb(realization, perturbation_for(config, value, derive_seed(config.seed, {1, s, trial})));
            const ChoiceSequence choices = build_choices(prediction);
            const Schedule followed = apply_choices(choices, realization);
            const double eta = prediction_error(series, followed);

            for (std::size_t a = 0; a < roster.size(); ++a) {
                ResultRecord& record = records[(s * trials + trial) * roster.size() + a];
                record.dataset = dataset;
                record.trial = trial;
                record.algorithm = roster[a].name;
                record.sweep = config.sweep;
                record.sweep_value = value;
                record.eta = eta;
                switch (roster[a].kind) {
                case Algorithm::Kind::Online:
                    record.ratio = fixed[a]->first;
                    record.runtime_us = fixed[a]->second;
                    break;
                case Algorithm::Kind::Blind:
                    record.ratio = competitive_ratio(optimum, realization, followed);
                    break;
                case Algorithm::Kind::Lap: {
                    const auto start = std::chrono::steady_clock::now();
                    const LapResult lap = lap_run(choices, realization, series, config.rho(), *roster[a].policy);
                    record.runtime_us = elapsed_us(start);
                    record.ratio = competitive_ratio(optimum, realization, lap.schedule);
                    break;
                }
                }
            }
        }
    };

    unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(trials, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t trial = next++; trial < trials; trial = next++) {
            try {
                run_trial(trial);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    ExperimentResult result;
    result.records = std::move(records);
    result.series = summarize(result.records, config.algorithms);
    return result;
}

std::vector<SeriesPoint> summarize(const std::vector<ResultRecord>& records, const std::vector<std::string>& roster) {
    std::vector<double> sweep_values;
    for (const auto& record : records)
        if (std::find(sweep_values.begin(), sweep_values.end(), record.sweep_value) == sweep_values.end())
            sweep_values.push_back(record.sweep_value);

    std::vector<SeriesPoint> series;
    for (double value : sweep_values) {
        for (const auto& name : roster) {
            std::vector<double> ratios;
            for (const auto& record : records)
                if (record.sweep_value == value && record.algorithm == name) ratios.push_back(record.ratio);
            if (ratios.empty()) continue;
            SeriesPoint point;
            point.sweep_value = value;
            point.algorithm = name;
            point.count = ratios.size();
            double sum = 0.0;
            for (double r : ratios) sum += r;
            point.mean_ratio = sum / static_cast<double>(ratios.size());
            if (ratios.size() > 1 && std::isfinite(point.mean_ratio)) {
                double squares = 0.0;
                for (double r : ratios) squares += (r - point.mean_ratio) * (r - point.mean_ratio);
                const double n = static_cast<double>(ratios.size());
                point.stderr_ratio = std::sqrt(squares / (n - 1.0)) / std::sqrt(n);
            }
            series.push_back(point);
        }
    }
    return series;
}

void write_results_csv(std::ostream& out, const std::vector<ResultRecord>& records) {
    out << "dataset,sweep,sweep_value,trial,algorithm,eta,ratio\n";
    for (const auto& r : records)
        out << r.dataset << ',' << to_string(r.sweep) << ',' << format_number(r.sweep_value) << ',' << r.trial << ','
            << r.algorithm << ',' << format_number(r.eta) << ',' << format_number(r.ratio) << '\n';
}

void write_series_csv(std::ostream& out, const std::vector<SeriesPoint>& series) {
    out << "sweep_value,algorithm,mean_ratio,stderr\n";
    for (const auto& p : series)
        out << format_number(p.sweep_value) << ',' << p.algorithm << ',' << format_number(p.mean_ratio) << ','
            << format_number(p.stderr_ratio) << '\n';
}

void write_timings_csv(std::ostream& out, const std::vector<ResultRecord>& records) {
    out << "sweep_value,trial,algorithm,runtime_us\n";
    for (const auto& r : records)
        out << format_number(r.sweep_value) << ',' << r.trial << ',' << r.algorithm << ','
            << format_number(std::round(r.runtime_us)) << '\n';
}

void write_experiment_outputs(const ExperimentConfig& config, const ExperimentResult& result) {
    std::filesystem::create_directories(config.out_dir);
    auto open = [&](const char* name) {
        std::ofstream out(config.out_dir / name, std::ios::binary);
        if (!out) throw Error("cannot write " + (config.out_dir / name).string());
        return out;
    };
    {
        auto out = open("results.csv");
        write_results_csv(out, result.records);
    }
    {
        auto out = open("series.csv");
        write_series_csv(out, result.series);
    }
    {
        auto out = open("timings.csv");
        write_timings_csv(out, result.records);
    }
    auto meta = open("metadata.txt");
    meta << "dataset=" << to_string(config.dataset) << '\n'
         << "sweep=" << to_string(config.sweep) << '\n'
         << "trials=" << config.trials << '\n'
         << "rho=" << format_number(config.rho()) << " (1 + rho_excess)\n"
         << "lap_fallback=" << config.lap_fallback << '\n'
         << "alpha=" << format_number(config.alpha) << '\n'
         << "seed=" << config.seed << '\n'
         << "# Reconstructed job attributes (not given by the source data):\n"
         << "#   weights i.i.d. uniform on (" << format_number(config.generator.attributes.weight_lo) << ", "
         << format_number(config.generator.attributes.weight_hi) << "]\n"
         << "#   deadline = max(previous deadline, release + U{" << config.generator.attributes.slack_min << ".."
         << config.generator.attributes.slack_max << "}) in arrival order (agreeable)\n"
         << "#   event logs: timestamps quantized linearly to slots 1.." << config.snap.slots_per_day
         << " within each UTC day\n"
         << "#   EDF_alpha alpha and the LAP fallback are harness choices\n";
}

} // namespace pktsched
