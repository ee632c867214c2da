#include "pktsched/instance.hpp"

#include "pktsched/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pktsched {

namespace {

std::string describe(const Job& job) {
    return "job " + std::to_string(job.id.value) + " (r=" + std::to_string(job.release) +
           ", d=" + std::to_string(job.deadline) + ", w=" + std::to_string(job.weight) + ")";
}

void validate_job(const Job& job) {
    if (job.release < 0) throw InvalidInstance(describe(job) + ": negative release");
    if (job.deadline < job.release + 1) throw InvalidInstance(describe(job) + ": deadline must exceed release");
    if (!std::isfinite(job.weight) || job.weight < 0.0)
        throw InvalidInstance(describe(job) + ": weight must be finite and nonnegative");
}

} // namespace

void break_weight_ties(std::vector<Job>& jobs) {
    if (jobs.size() < 2) return;

    double smallest_positive = std::numeric_limits<double>::infinity();
    for (const Job& job : jobs)
        if (job.weight > 0.0) smallest_positive = std::min(smallest_positive, job.weight);
    if (!std::isfinite(smallest_positive)) smallest_positive = 1.0;
    const double step = std::ldexp(smallest_positive, -40);

    std::vector<std::size_t> order(jobs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (jobs[a].weight != jobs[b].weight) return jobs[a].weight < jobs[b].weight;
        return jobs[a].id < jobs[b].id;
    });

    // Walk in (weight, id) order keeping the assigned weights strictly increasing.
    double previous = -std::numeric_limits<double>::infinity();
    double group_weight = std::numeric_limits<double>::quiet_NaN();
    std::size_t rank = 0;
    for (std::size_t index : order) {
        Job& job = jobs[index];
        const double original = job.weight;
        rank = (original == group_weight) ? rank + 1 : 0;
        group_weight = original;
        if (original > previous) {
            previous = original;
            continue;
        }
        double bumped = original + static_cast<double>(rank) * step;
        if (bumped <= previous) bumped = std::nextafter(previous, std::numeric_limits<double>::infinity());
        job.weight = bumped;
        previous = bumped;
    }
}

Instance::Instance(std::vector<Job> jobs, std::optional<Slot> horizon) : jobs_(std::move(jobs)) {
    for (const Job& job : jobs_) validate_job(job);

    std::sort(jobs_.begin(), jobs_.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < jobs_.size(); ++i)
        if (jobs_[i].id == jobs_[i - 1].id)
            throw InvalidInstance("duplicate job id " + std::to_string(jobs_[i].id.value));

    break_weight_ties(jobs_);

    const Slot latest = max_deadline();
    if (horizon) {
        if (*horizon < latest)
            throw InvalidInstance("horizon " + std::to_string(*horizon) + " is before the latest deadline " +
                                  std::to_string(latest));
        horizon_ = *horizon;
    } else {
        horizon_ = latest;
    }
}

const Job* Instance::find(JobId id) const noexcept {
    auto it = std::lower_bound(jobs_.begin(), jobs_.end(), id, [](const Job& job, JobId key) { return job.id < key; });
    if (it == jobs_.end() || it->id != id) return nullptr;
    return &*it;
}

Slot Instance::max_deadline() const noexcept {
    Slot latest = 0;
    for (const Job& job : jobs_) latest = std::max(latest, job.deadline);
    return latest;
}

Instance Instance::released_through(Slot t) const {
    std::vector<Job> prefix;
    for (const Job& job : jobs_)
        if (job.release <= t) prefix.push_back(job);
    return Instance(std::move(prefix), horizon_);
}

Instance Instance::with_horizon(Slot horizon) const {
    return Instance(jobs_, horizon);
}

bool is_agreeable(const Instance& instance) {
    std::vector<Job> jobs(instance.jobs().begin(), instance.jobs().end());
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        if (a.release != b.release) return a.release < b.release;
        return a.deadline < b.deadline;
    });
    for (std::size_t i = 1; i < jobs.size(); ++i)
        if (jobs[i].deadline < jobs[i - 1].deadline) return false;
    return true;
}

void align_horizons(Instance& a, Instance& b) {
    const Slot horizon = std::max(a.horizon(), b.horizon());
    if (a.horizon() != horizon) a = a.with_horizon(horizon);
    if (b.horizon() != horizon) b = b.with_horizon(horizon);
}

} // namespace pktsched
