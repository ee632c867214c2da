// pktsched: command-line front end for the scheduling library.

#include "pktsched/core.hpp"
#include "pktsched/errors.hpp"
#include "pktsched/experiment.hpp"
#include "pktsched/format.hpp"
#include "pktsched/generators.hpp"
#include "pktsched/instance_io.hpp"
#include "pktsched/lap.hpp"
#include "pktsched/offline_opt.hpp"
#include "pktsched/online.hpp"
#include "pktsched/perturbation.hpp"
#include "pktsched/prediction.hpp"
#include "pktsched/snap_ingest.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace pktsched;

namespace {

void print_schedule(std::ostream& out, const Schedule& schedule) {
    out << "slot,job_id,weight\n";
    for (Slot t = 0; t <= schedule.horizon(); ++t) {
        const auto& job = schedule.at(t);
        if (!job) continue;
        out << t << ',' << job->id.value << ',' << format_number(job->weight) << '\n';
    }
}

template <typename T>
T spec_value(const std::string& key, const std::string& text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("bad value for " + key + ": '" + text + "'");
    return value;
}

// "kind=uniform,horizon=75,seed=7,lo=2,hi=8" and friends.
GeneratorSpec parse_generator_spec(const std::string& text) {
    GeneratorSpec spec;
    UniformArrivals uniform;
    PowerLawArrivals powerlaw;
    bool is_powerlaw = false;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value in --spec, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "kind") {
            if (value == "uniform") is_powerlaw = false;
            else if (value == "powerlaw") is_powerlaw = true;
            else throw ConfigError("unknown generator kind '" + value + "'");
        } else if (key == "horizon") spec.horizon = spec_value<Slot>(key, value);
        else if (key == "seed") spec.seed = spec_value<std::uint64_t>(key, value);
        else if (key == "lo") uniform.lo = spec_value<int>(key, value);
        else if (key == "hi") uniform.hi = spec_value<int>(key, value);
        else if (key == "a") powerlaw.a = spec_value<double>(key, value);
        else if (key == "M") powerlaw.M = spec_value<double>(key, value);
        else if (key == "weight_lo") spec.attributes.weight_lo = spec_value<double>(key, value);
        else if (key == "weight_hi") spec.attributes.weight_hi = spec_value<double>(key, value);
        else if (key == "slack_min") spec.attributes.slack_min = spec_value<Slot>(key, value);
        else if (key == "slack_max") spec.attributes.slack_max = spec_value<Slot>(key, value);
        else throw ConfigError("unknown --spec key '" + key + "'");
    }
    if (is_powerlaw) spec.kind = powerlaw;
    else spec.kind = uniform;
    return spec;
}

int run_command(const std::string& algo, const std::string& real_path, const std::string& pred_path, double rho,
                const std::string& fallback, const std::string& trace_path) {
    Instance realization = read_instance_csv(real_path);
    const bool needs_prediction = algo == "blind" || algo == "lap";
    if (needs_prediction && pred_path.empty()) throw ConfigError("--algo " + algo + " needs --pred");

    Schedule schedule;
    if (algo == "blind" || algo == "lap") {
        Instance prediction = read_instance_csv(pred_path);
        align_horizons(realization, prediction);
        if (algo == "blind") {
            schedule = blind_follow(prediction, realization);
        } else {
            const LapResult result = lap_run(prediction, realization, rho, OnlinePolicy::parse(fallback));
            schedule = result.schedule;
            if (!trace_path.empty()) {
                std::ofstream out(trace_path, std::ios::binary);
                if (!out) throw Error("cannot write " + trace_path);
                write_trace_csv(out, result.trace);
            }
        }
    } else {
        schedule = run_online(OnlinePolicy::parse(algo), realization);
    }
    std::cout << "# weight=" << format_number(schedule.weight())
              << " ratio=" << format_number(competitive_ratio(realization, schedule)) << '\n';
    print_schedule(std::cout, schedule);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online packet scheduling with predictions"};
    app.require_subcommand(1);

    auto* opt = app.add_subcommand("opt", "Optimal weight and canonical optimal schedule");
    std::string opt_path;
    opt->add_option("instance", opt_path, "Instance CSV")->required();

    auto* eta = app.add_subcommand("eta", "Prediction error of a prediction against a realization");
    std::string eta_real, eta_pred;
    eta->add_option("--real", eta_real, "Realization CSV")->required();
    eta->add_option("--pred", eta_pred, "Prediction CSV")->required();

    auto* run = app.add_subcommand("run", "Run one algorithm and report its schedule and ratio");
    std::string algo, run_real, run_pred, fallback = "mg", trace_path;
    double rho = 1.1;
    run->add_option("--algo", algo, "blind | lap | greedy | edf | edf-alpha:<a> | mg")->required();
    run->add_option("--real", run_real, "Realization CSV")->required();
    run->add_option("--pred", run_pred, "Prediction CSV (blind, lap)");
    run->add_option("--rho", rho, "LAP threshold, at least 1")->capture_default_str();
    run->add_option("--fallback", fallback, "LAP fallback policy")->capture_default_str();
    run->add_option("--trace", trace_path, "Write the LAP trace CSV here");

    auto* experiment = app.add_subcommand("experiment", "Run a competitive-ratio sweep");
    std::string config_path, out_dir_override;
    std::optional<unsigned> threads_override;
    experiment->add_option("--config", config_path, "Config file")->required();
    experiment->add_option("--out-dir", out_dir_override, "Overrides out_dir");
    experiment->add_option("--threads", threads_override, "Overrides threads");

    auto* gen = app.add_subcommand("gen", "Generate a synthetic instance");
    std::string gen_spec = "kind=uniform", gen_out;
    gen->add_option("--spec", gen_spec, "kind=uniform|powerlaw,horizon=,seed=,lo=,hi=,a=,M=,...")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "Output CSV (stdout when omitted)");

    auto* pert = app.add_subcommand("perturb", "Build a prediction by perturbing an instance");
    std::string pert_in, pert_out;
    std::optional<double> sigma;
    std::optional<Slot> shift;
    std::uint64_t pert_seed = 0;
    pert->add_option("--in", pert_in, "Instance CSV")->required();
    pert->add_option("--out", pert_out, "Output CSV (stdout when omitted)");
    auto* sigma_opt = pert->add_option("--sigma", sigma, "Gaussian weight noise");
    auto* k_opt = pert->add_option("--k", shift, "Uniform deadline shift range");
    sigma_opt->excludes(k_opt);
    pert->add_option("--seed", pert_seed, "Seed")->capture_default_str();

    auto* ingest = app.add_subcommand("ingest", "Split an event log into one instance per busy day");
    std::string ingest_in, ingest_out;
    SnapIngestOptions snap;
    ingest->add_option("--in", ingest_in, "Event log")->required();
    ingest->add_option("--out-dir", ingest_out, "Output directory")->required();
    ingest->add_option("--column", snap.timestamp_column, "0-based timestamp column")->capture_default_str();
    ingest->add_option("--slots", snap.slots_per_day, "Slots per day")->capture_default_str();
    ingest->add_option("--min-events", snap.min_events, "Smallest qualifying day")->capture_default_str();
    ingest->add_option("--max-events", snap.max_events, "Largest qualifying day")->capture_default_str();
    ingest->add_option("--seed", snap.seed, "Attribute seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*opt) {
            const Instance instance = read_instance_csv(opt_path);
            const Schedule schedule = opt_schedule(instance);
            std::cout << "# weight=" << format_number(schedule.weight()) << '\n';
            print_schedule(std::cout, schedule);
        } else if (*eta) {
            Instance realization = read_instance_csv(eta_real);
            Instance prediction = read_instance_csv(eta_pred);
            align_horizons(realization, prediction);
            std::cout << format_number(prediction_error(realization, prediction)) << '\n';
        } else if (*run) {
            return run_command(algo, run_real, run_pred, rho, fallback, trace_path);
        } else if (*experiment) {
            ExperimentConfig config = parse_experiment_config(std::filesystem::path(config_path));
            if (!out_dir_override.empty()) config.out_dir = out_dir_override;
            if (threads_override) config.threads = *threads_override;
            const ExperimentResult result = run_experiment(config);
            write_experiment_outputs(config, result);
            write_series_csv(std::cout, result.series);
        } else if (*gen) {
            const Instance instance = generate(parse_generator_spec(gen_spec));
            if (gen_out.empty()) write_instance_csv(std::cout, instance);
            else write_instance_csv(std::filesystem::path(gen_out), instance);
        } else if (*pert) {
            if (!sigma && !shift) throw ConfigError("perturb needs --sigma or --k");
            PerturbationSpec spec;
            spec.seed = pert_seed;
            if (sigma) spec.kind = WeightGaussian{*sigma};
            else spec.kind = DeadlineShift{*shift};
            const Instance prediction = perturb(read_instance_csv(pert_in), spec);
            if (pert_out.empty()) write_instance_csv(std::cout, prediction);
            else write_instance_csv(std::filesystem::path(pert_out), prediction);
        } else if (*ingest) {
            const auto days = ingest_snap_events(std::filesystem::path(ingest_in), snap);
            for (const auto& path : write_day_instances(ingest_out, days)) std::cout << path.string() << '\n';
        }
    } catch (const std::exception& error) {
        std::cerr << "pktsched: " << error.what() << '\n';
        return 1;
    }
    return 0;
}
