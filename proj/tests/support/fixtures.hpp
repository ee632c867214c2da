#pragma once

// Shared fixtures and random instance factories for the test binaries.

#include "pktsched/instance.hpp"

#include <cstdint>
#include <random>

namespace pktsched::testing {

inline Job job(std::uint64_t id, Slot r, Slot d, double w) { return Job{JobId{id}, r, d, w}; }

/// J1 = {(0,1,eps), (0,2,1)} over [0,2], eps = 0.01.
Instance lower_bound_j1();

/// J2 = J1 plus (1,2,0.999).
Instance lower_bound_j2();

struct RandomShape {
    std::size_t max_jobs = 8;
    Slot max_horizon = 8;
    bool agreeable = false;
};

/// Small instance with distinct weights k/1024, so every weight sum the
/// tests compare is exact in double precision.
Instance random_instance(std::mt19937_64& rng, const RandomShape& shape);

/// A prediction for `realization` drawn from a mix of honest and hostile
/// shapes: exact copy, dyadic weight noise, deadline and release shifts,
/// dropped and invented jobs, reversed weights, and the empty instance.
/// Weights stay dyadic and distinct.
Instance random_prediction(std::mt19937_64& rng, const Instance& realization, const RandomShape& shape);

} // namespace pktsched::testing
