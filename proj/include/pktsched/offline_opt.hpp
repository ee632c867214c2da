#pragma once

#include "pktsched/instance.hpp"
#include "pktsched/schedule.hpp"

#include <cstddef>
#include <vector>

namespace pktsched {

/// Exact offline optimum as a canonical schedule.
///
/// Jobs and slots form a bipartite graph with an edge wherever the job is
/// feasible. Jobs are offered to the matching in decreasing weight, each
/// through one augmenting-path search; a matched job is never unmatched
/// later, so the final job set is the greedy basis of the transversal
/// matroid, which is a maximum-weight matching. No arithmetic is done on
/// weights, only comparisons.
Schedule opt_schedule(const Instance& instance);

inline double opt_weight(const Instance& instance) { return opt_schedule(instance).weight(); }

inline constexpr std::size_t kBruteForceMaxJobs = 12;
inline constexpr Slot kBruteForceMaxHorizon = 12;

struct BruteForceResult {
    double weight = 0.0;
    Schedule schedule;
};

/// Exhaustive oracle: sweeps the slots and enumerates every set of jobs
/// reachable by some feasible job-to-slot assignment, then keeps the heaviest.
/// Throws TooLarge beyond kBruteForceMaxJobs jobs or kBruteForceMaxHorizon.
BruteForceResult brute_force_opt(const Instance& instance);

/// values[t] = weight of slots [0, t] in the canonical optimum of the
/// release prefix J<=t.
struct PrefixOptSeries {
    std::vector<double> values;

    double at(Slot t) const { return values.at(static_cast<std::size_t>(t)); }
    Slot horizon() const noexcept { return static_cast<Slot>(values.size()) - 1; }
};

PrefixOptSeries prefix_opt_series(const Instance& instance);

} // namespace pktsched
