#pragma once

#include "pktsched/instance.hpp"
#include "pktsched/schedule.hpp"

#include <string>
#include <vector>

namespace pktsched {

/// Released, unprocessed jobs still feasible at t (the buffer). Sorted by id.
std::vector<Job> pending_set(const Instance& instance, const JobIdSet& processed, Slot t);

/// D(t, J): unprocessed jobs with deadline < t + 1. Sorted by id.
std::vector<Job> expired_set(const Instance& instance, const JobIdSet& processed, Slot t);

/// Lays out `selected` slot by slot, always taking the released job that is
/// first under canonical_before. Throws InfeasibleSelection if some selected
/// job cannot be placed or is not in the instance.
Schedule canonicalize(const Instance& instance, const JobIdSet& selected);

struct ScheduleCheck {
    bool ok = true;
    std::vector<std::string> violations;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks slot count, job identity and weight, feasibility windows, and
/// that no job appears twice.
ScheduleCheck validate_schedule(const Instance& instance, const Schedule& schedule);

/// Ratio convention shared by the local test, the error measure, and the
/// competitive ratio: 0/0 is 1 and x/0 is +inf for x > 0.
double weight_ratio(double numerator, double denominator) noexcept;

} // namespace pktsched
