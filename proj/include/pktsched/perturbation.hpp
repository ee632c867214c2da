#pragma once

#include "pktsched/instance.hpp"

#include <cstdint>
#include <variant>

namespace pktsched {

/// w' = max(w + N(0, sigma), 1e-9); ids, releases and deadlines unchanged.
struct WeightGaussian {
    double sigma = 0.0;
};

/// d' = max(r + 1, d + U{-k..k}); ids, releases and weights unchanged.
struct DeadlineShift {
    Slot k = 0;
};

struct PerturbationSpec {
    std::variant<WeightGaussian, DeadlineShift> kind = WeightGaussian{};
    std::uint64_t seed = 0;
};

inline constexpr double kMinPerturbedWeight = 1e-9;

/// Builds a prediction from a realization. One draw per job, in id order.
/// The horizon is kept unless a shifted deadline runs past it.
Instance perturb(const Instance& instance, const PerturbationSpec& spec);

} // namespace pktsched
