#include "pktsched/offline_opt.hpp"

#include "pktsched/core.hpp"
#include "pktsched/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace pktsched {

namespace {

class SlotMatcher {
public:
    SlotMatcher(std::span<const Job> jobs, Slot horizon)
        : jobs_(jobs), owner_(static_cast<std::size_t>(horizon) + 1, kFree),
          visit_stamp_(owner_.size(), 0), horizon_(horizon) {}

    bool offer(std::size_t job) {
        if (augment(job)) {
            // A failed search leaves the matching untouched, so its visited
            // slots stay dead ends until the next successful augmentation.
            ++stamp_;
            return true;
        }
        return false;
    }

    const std::vector<std::size_t>& owners() const noexcept { return owner_; }

    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

private:
    bool augment(std::size_t job) {
        const Job& j = jobs_[job];
        const Slot first = std::max<Slot>(j.release, 0);
        const Slot last = std::min<Slot>(j.deadline - 1, horizon_);
        // Free slot in the window first; keeps most searches shallow.
        for (Slot t = first; t <= last; ++t) {
            const auto s = static_cast<std::size_t>(t);
            if (owner_[s] == kFree) {
                owner_[s] = job;
                return true;
            }
        }
        for (Slot t = first; t <= last; ++t) {
            const auto s = static_cast<std::size_t>(t);
            if (visit_stamp_[s] == stamp_) continue;
            visit_stamp_[s] = stamp_;
            if (augment(owner_[s])) {
                owner_[s] = job;
                return true;
            }
        }
        return false;
    }

    std::span<const Job> jobs_;
    std::vector<std::size_t> owner_;
    std::vector<std::uint64_t> visit_stamp_;
    std::uint64_t stamp_ = 1;
    Slot horizon_;
};

} // namespace

Schedule opt_schedule(const Instance& instance) {
    const auto jobs = instance.jobs();
    std::vector<std::size_t> order(jobs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (jobs[a].weight != jobs[b].weight) return jobs[a].weight > jobs[b].weight;
        return jobs[a].id < jobs[b].id;
    });

    SlotMatcher matcher(jobs, instance.horizon());
    for (std::size_t job : order) matcher.offer(job);

    JobIdSet selected;
    for (std::size_t owner : matcher.owners())
        if (owner != SlotMatcher::kFree) selected.insert(jobs[owner].id);
    return canonicalize(instance, selected);
}

BruteForceResult brute_force_opt(const Instance& instance) {
    if (instance.size() > kBruteForceMaxJobs)
        throw TooLarge("brute force supports at most " + std::to_string(kBruteForceMaxJobs) + " jobs");
    if (instance.horizon() > kBruteForceMaxHorizon)
        throw TooLarge("brute force supports horizons up to " + std::to_string(kBruteForceMaxHorizon));

    const auto jobs = instance.jobs();
    const std::size_t n = jobs.size();
    const std::uint32_t full = 1u << n;

    // reachable[mask]: some assignment of the slots swept so far processes
    // exactly the jobs in mask.
    std::vector<char> reachable(full, 0);
    reachable[0] = 1;
    for (Slot t = 0; t <= instance.horizon(); ++t) {
        std::vector<char> next = reachable;
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            if (!reachable[mask]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!(mask & (1u << j)) && feasible_at(jobs[j], t)) next[mask | (1u << j)] = 1;
        }
        reachable = std::move(next);
    }

    std::uint32_t best_mask = 0;
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!reachable[mask]) continue;
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) total += jobs[j].weight;
        if (total > best) {
            best = total;
            best_mask = mask;
        }
    }

    JobIdSet selected;
    for (std::size_t j = 0; j < n; ++j)
        if (best_mask & (1u << j)) selected.insert(jobs[j].id);
    BruteForceResult result;
    result.schedule = canonicalize(instance, selected);
    result.weight = result.schedule.weight();
    return result;
}

PrefixOptSeries prefix_opt_series(const Instance& instance) {
    PrefixOptSeries series;
    series.values.resize(static_cast<std::size_t>(instance.horizon()) + 1, 0.0);

    // J<=t only changes at release slots; between them the optimum is reused.
    std::vector<Slot> releases;
    for (const Job& job : instance.jobs()) releases.push_back(job.release);
    std::sort(releases.begin(), releases.end());

    Schedule current(instance.horizon());
    std::size_t released = 0;
    for (Slot t = 0; t <= instance.horizon(); ++t) {
        const std::size_t before = released;
        while (released < releases.size() && releases[released] <= t) ++released;
        if (released != before) current = opt_schedule(instance.released_through(t));
        series.values[static_cast<std::size_t>(t)] = current.weight(t);
    }
    return series;
}

} // namespace pktsched
