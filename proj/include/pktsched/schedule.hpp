#pragma once

#include "pktsched/job.hpp"

#include <optional>
#include <vector>

namespace pktsched {

/// Per-slot assignment over [0, horizon]. An empty slot is a dummy job of
/// weight zero.
class Schedule {
public:
    explicit Schedule(Slot horizon = 0);

    Slot horizon() const noexcept { return static_cast<Slot>(slots_.size()) - 1; }
    std::size_t slot_count() const noexcept { return slots_.size(); }

    const std::optional<Job>& at(Slot t) const { return slots_.at(static_cast<std::size_t>(t)); }
    bool is_dummy(Slot t) const { return !at(t).has_value(); }

    void assign(Slot t, const Job& job) { slots_.at(static_cast<std::size_t>(t)) = job; }
    void clear(Slot t) { slots_.at(static_cast<std::size_t>(t)).reset(); }

    /// Total weight of slots [0, upto]; the whole schedule when absent.
    double weight(std::optional<Slot> upto = std::nullopt) const;

    /// Ids of scheduled jobs in slot order.
    std::vector<JobId> job_ids() const;
    JobIdSet job_id_set() const;
    std::size_t job_count() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    std::vector<std::optional<Job>> slots_;
};

inline double schedule_weight(const Schedule& schedule, std::optional<Slot> upto = std::nullopt) {
    return schedule.weight(upto);
}

} // namespace pktsched
