#pragma once

#include "pktsched/instance.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <variant>
#include <vector>

namespace pktsched {

/// Synthesized job attributes. Weights are i.i.d. on (weight_lo, weight_hi].
/// Deadlines follow arrival order: d = max(previous deadline, r + U{slack_min..slack_max}),
/// which keeps every generated instance agreeable.
struct AttributeModel {
    double weight_lo = 0.0;
    double weight_hi = 1.0;
    Slot slack_min = 1;
    Slot slack_max = 10;
};

/// Number of arrivals per slot ~ U{lo..hi}.
struct UniformArrivals {
    int lo = 2;
    int hi = 8;
};

/// Number of arrivals per slot = round(M (1 - p)), p with density a x^(a-1) on [0, 1].
struct PowerLawArrivals {
    double a = 150.0;
    double M = 500.0;
};

struct GeneratorSpec {
    std::variant<UniformArrivals, PowerLawArrivals> kind = UniformArrivals{};
    Slot horizon = 75;  // arrivals happen in slots 1..horizon
    AttributeModel attributes;
    std::uint64_t seed = 0;
};

Instance gen_uniform(const GeneratorSpec& spec);
Instance gen_powerlaw(const GeneratorSpec& spec);
Instance generate(const GeneratorSpec& spec);

/// Jobs with the given release slots (nondecreasing), ids 0..n-1 in that
/// order, attributes drawn from `model`.
std::vector<Job> synthesize_jobs(std::span<const Slot> releases, const AttributeModel& model, std::mt19937_64& rng);

} // namespace pktsched
