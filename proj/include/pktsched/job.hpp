#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>

namespace pktsched {

/// Time is slotted; slot t is the unit interval [t, t+1).
using Slot = std::int64_t;

/// Stable job identifier, unique within an instance. A realization and its
/// prediction refer to the same packet through the same id.
struct JobId {
    std::uint64_t value = 0;

    friend constexpr auto operator<=>(JobId, JobId) = default;
};

using JobIdSet = std::set<JobId>;

/// One unit-length packet. It may be sent in any slot t with
/// release <= t <= deadline - 1.
struct Job {
    JobId id;
    Slot release = 0;
    Slot deadline = 1;
    double weight = 0.0;

    friend bool operator==(const Job&, const Job&) = default;
};

constexpr bool feasible_at(const Job& job, Slot t) noexcept {
    return job.release <= t && job.deadline - 1 >= t;
}

/// `a` dominates `b` when it is strictly heavier and expires no later.
constexpr bool dominates(const Job& a, const Job& b) noexcept {
    return a.weight > b.weight && a.deadline <= b.deadline;
}

/// Canonical priority: earliest deadline, then heavier, then smaller id.
/// The minimum of a buffer under this order is never dominated by another
/// buffered job.
constexpr bool canonical_before(const Job& a, const Job& b) noexcept {
    if (a.deadline != b.deadline) return a.deadline < b.deadline;
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.id < b.id;
}

} // namespace pktsched

template <>
struct std::hash<pktsched::JobId> {
    std::size_t operator()(pktsched::JobId id) const noexcept {
        return std::hash<std::uint64_t>{}(id.value);
    }
};
