#pragma once

#include "pktsched/job.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pktsched {

/// A finite set of jobs with a time horizon T; slots run over [0, T].
///
/// Construction validates every job and then makes all weights pairwise
/// distinct: within each group of equal weights (ordered by id) the k-th job
/// gets k * 2^-40 * (smallest positive weight, or 1) added, bumped to the next
/// representable value where rounding would swallow the increment. Instances
/// whose weights are already distinct are left untouched.
class Instance {
public:
    Instance() = default;

    /// Throws InvalidInstance. The horizon defaults to the latest deadline.
    explicit Instance(std::vector<Job> jobs, std::optional<Slot> horizon = std::nullopt);

    /// Jobs sorted by id.
    std::span<const Job> jobs() const noexcept { return jobs_; }
    Slot horizon() const noexcept { return horizon_; }
    std::size_t size() const noexcept { return jobs_.size(); }
    bool empty() const noexcept { return jobs_.empty(); }

    const Job* find(JobId id) const noexcept;
    bool contains(JobId id) const noexcept { return find(id) != nullptr; }

    Slot max_deadline() const noexcept;

    /// The release prefix J<=t, keeping this instance's horizon.
    Instance released_through(Slot t) const;

    /// Same jobs over a different horizon (must still cover every deadline).
    Instance with_horizon(Slot horizon) const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<Job> jobs_;
    Slot horizon_ = 0;
};

/// Applies the deterministic tie-break described on Instance in place.
void break_weight_ties(std::vector<Job>& jobs);

/// Later-released jobs never expire earlier.
bool is_agreeable(const Instance& instance);

/// Extends both horizons to the later of the two.
void align_horizons(Instance& a, Instance& b);

} // namespace pktsched
