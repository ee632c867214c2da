#include "pktsched/core.hpp"

#include "pktsched/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace pktsched {

std::vector<Job> pending_set(const Instance& instance, const JobIdSet& processed, Slot t) {
    std::vector<Job> buffer;
    for (const Job& job : instance.jobs())
        if (feasible_at(job, t) && !processed.contains(job.id)) buffer.push_back(job);
    return buffer;
}

std::vector<Job> expired_set(const Instance& instance, const JobIdSet& processed, Slot t) {
    std::vector<Job> expired;
    for (const Job& job : instance.jobs())
        if (job.deadline < t + 1 && !processed.contains(job.id)) expired.push_back(job);
    return expired;
}

Schedule canonicalize(const Instance& instance, const JobIdSet& selected) {
    std::vector<Job> jobs;
    jobs.reserve(selected.size());
    for (JobId id : selected) {
        const Job* job = instance.find(id);
        if (!job) throw InfeasibleSelection("job " + std::to_string(id.value) + " is not in the instance");
        jobs.push_back(*job);
    }
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.release < b.release; });

    auto later = [](const Job& a, const Job& b) { return canonical_before(b, a); };
    std::priority_queue<Job, std::vector<Job>, decltype(later)> ready(later);

    Schedule schedule(instance.horizon());
    std::size_t next = 0;
    for (Slot t = 0; t <= instance.horizon(); ++t) {
        while (next < jobs.size() && jobs[next].release <= t) ready.push(jobs[next++]);
        if (ready.empty()) continue;
        const Job job = ready.top();
        ready.pop();
        if (!feasible_at(job, t))
            throw InfeasibleSelection("job " + std::to_string(job.id.value) + " misses its deadline");
        schedule.assign(t, job);
    }
    if (!ready.empty() || next < jobs.size())
        throw InfeasibleSelection("selection does not fit within the horizon");
    return schedule;
}

ScheduleCheck validate_schedule(const Instance& instance, const Schedule& schedule) {
    ScheduleCheck check;
    auto fail = [&](std::string message) {
        check.ok = false;
        check.violations.push_back(std::move(message));
    };

    if (schedule.horizon() != instance.horizon())
        fail("schedule horizon " + std::to_string(schedule.horizon()) + " != instance horizon " +
             std::to_string(instance.horizon()));

    JobIdSet seen;
    for (Slot t = 0; t <= schedule.horizon(); ++t) {
        const auto& slot = schedule.at(t);
        if (!slot) continue;
        const std::string where = "slot " + std::to_string(t) + ": job " + std::to_string(slot->id.value);
        const Job* job = instance.find(slot->id);
        if (!job) {
            fail(where + " is not in the instance");
            continue;
        }
        if (*job != *slot) fail(where + " does not match the instance record");
        if (!feasible_at(*job, t)) fail(where + " is outside its window");
        if (!seen.insert(job->id).second) fail(where + " is scheduled more than once");
    }
    return check;
}

double weight_ratio(double numerator, double denominator) noexcept {
    if (denominator == 0.0) return numerator == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return numerator / denominator;
}

} // namespace pktsched
