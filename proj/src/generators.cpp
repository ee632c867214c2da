#include "pktsched/generators.hpp"

#include "pktsched/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pktsched {

namespace {

void check_common(const GeneratorSpec& spec) {
    if (spec.horizon < 1) throw InvalidInstance("generator horizon must be at least 1");
    const auto& m = spec.attributes;
    if (!(m.weight_lo >= 0.0 && m.weight_lo < m.weight_hi)) throw InvalidInstance("need 0 <= weight_lo < weight_hi");
    if (m.slack_min < 1 || m.slack_max < m.slack_min) throw InvalidInstance("need 1 <= slack_min <= slack_max");
}

Instance from_counts(const std::vector<std::int64_t>& counts, const GeneratorSpec& spec, std::mt19937_64& rng) {
    std::vector<Slot> releases;
    for (std::size_t i = 0; i < counts.size(); ++i)
        releases.insert(releases.end(), static_cast<std::size_t>(counts[i]), static_cast<Slot>(i) + 1);
    return Instance(synthesize_jobs(releases, spec.attributes, rng));
}

} // namespace

std::vector<Job> synthesize_jobs(std::span<const Slot> releases, const AttributeModel& model, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<Slot> slack(model.slack_min, model.slack_max);
    std::vector<Job> jobs;
    jobs.reserve(releases.size());
    Slot previous_deadline = 0;
    for (std::size_t i = 0; i < releases.size(); ++i) {
        Job job;
        job.id = JobId{i};
        job.release = releases[i];
        // 1 - u lies in (0, 1], so the weight lies in (lo, hi].
        job.weight = model.weight_lo + (model.weight_hi - model.weight_lo) * (1.0 - unit(rng));
        job.deadline = std::max(previous_deadline, job.release + slack(rng));
        previous_deadline = job.deadline;
        jobs.push_back(job);
    }
    return jobs;
}

Instance gen_uniform(const GeneratorSpec& spec) {
    check_common(spec);
    const auto* arrivals = std::get_if<UniformArrivals>(&spec.kind);
    if (!arrivals) throw InvalidInstance("gen_uniform needs uniform arrivals");
    if (arrivals->lo < 0 || arrivals->lo > arrivals->hi) throw InvalidInstance("need 0 <= lo <= hi");

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::int64_t> count(arrivals->lo, arrivals->hi);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(spec.horizon));
    for (auto& c : counts) c = count(rng);
    return from_counts(counts, spec, rng);
}

Instance gen_powerlaw(const GeneratorSpec& spec) {
    check_common(spec);
    const auto* arrivals = std::get_if<PowerLawArrivals>(&spec.kind);
    if (!arrivals) throw InvalidInstance("gen_powerlaw needs power-law arrivals");
    if (!(arrivals->a > 0.0)) throw InvalidInstance("power-law exponent a must be positive");
    if (!(arrivals->M >= 0.0)) throw InvalidInstance("power-law scale M must be nonnegative");

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(spec.horizon));
    for (auto& c : counts) {
        // Inverse CDF of x^a on [0, 1].
        const double p = std::pow(unit(rng), 1.0 / arrivals->a);
        c = std::max<std::int64_t>(0, std::llround(arrivals->M * (1.0 - p)));
    }
    return from_counts(counts, spec, rng);
}

Instance generate(const GeneratorSpec& spec) {
    if (std::holds_alternative<UniformArrivals>(spec.kind)) return gen_uniform(spec);
    return gen_powerlaw(spec);
}

} // namespace pktsched
