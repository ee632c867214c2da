#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace pktsched::testing {

Instance lower_bound_j1() { return Instance({job(0, 0, 1, 0.01), job(1, 0, 2, 1.0)}, 2); }

Instance lower_bound_j2() { return Instance({job(0, 0, 1, 0.01), job(1, 0, 2, 1.0), job(2, 1, 2, 0.999)}, 2); }

namespace {

std::vector<int> distinct_numerators(std::mt19937_64& rng, std::size_t count) {
    std::vector<int> pool(1024);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count);
    return pool;
}

Slot uniform_slot(std::mt19937_64& rng, Slot lo, Slot hi) { return std::uniform_int_distribution<Slot>(lo, hi)(rng); }

} // namespace

Instance random_instance(std::mt19937_64& rng, const RandomShape& shape) {
    const Slot horizon = uniform_slot(rng, 1, shape.max_horizon);
    const auto n = static_cast<std::size_t>(uniform_slot(rng, 0, static_cast<Slot>(shape.max_jobs)));
    const auto numerators = distinct_numerators(rng, n);

    std::vector<Job> jobs;
    for (std::size_t i = 0; i < n; ++i) {
        const Slot r = uniform_slot(rng, 0, horizon - 1);
        const Slot d = uniform_slot(rng, r + 1, horizon);
        jobs.push_back(job(i, r, d, numerators[i] / 1024.0));
    }
    if (shape.agreeable) {
        std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.release < b.release; });
        Slot running = 0;
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            running = std::max(running, jobs[i].deadline);
            jobs[i].deadline = running;
            jobs[i].id = JobId{i};
        }
    }
    return Instance(std::move(jobs), horizon);
}

Instance random_prediction(std::mt19937_64& rng, const Instance& realization, const RandomShape& shape) {
    std::vector<Job> jobs(realization.jobs().begin(), realization.jobs().end());
    const Slot horizon = realization.horizon();
    const int mode = std::uniform_int_distribution<int>(0, 7)(rng);
    switch (mode) {
    case 0: // exact
        break;
    case 1: { // weight noise: fresh distinct numerators near the old ones
        auto numerators = distinct_numerators(rng, jobs.size());
        for (std::size_t i = 0; i < jobs.size(); ++i)
            if (std::bernoulli_distribution(0.5)(rng)) jobs[i].weight = numerators[i] / 1024.0;
        // keep distinctness: retry with a full redraw on collision
        std::vector<double> w;
        for (const auto& j : jobs) w.push_back(j.weight);
        std::sort(w.begin(), w.end());
        if (std::adjacent_find(w.begin(), w.end()) != w.end())
            for (std::size_t i = 0; i < jobs.size(); ++i) jobs[i].weight = numerators[i] / 1024.0;
        break;
    }
    case 2: // deadline shifts
        for (auto& j : jobs) j.deadline = std::max(j.release + 1, j.deadline + uniform_slot(rng, -3, 3));
        break;
    case 3: // release shifts, window length kept
        for (auto& j : jobs) {
            const Slot span = j.deadline - j.release;
            j.release = std::max<Slot>(0, j.release + uniform_slot(rng, -2, 2));
            j.deadline = j.release + span;
        }
        break;
    case 4: { // drop some, invent some
        std::vector<Job> kept;
        for (const auto& j : jobs)
            if (std::bernoulli_distribution(0.6)(rng)) kept.push_back(j);
        std::vector<double> used;
        for (const auto& j : kept) used.push_back(j.weight);
        const auto extra = static_cast<std::size_t>(uniform_slot(rng, 0, 3));
        auto numerators = distinct_numerators(rng, 64);
        std::size_t next = 0;
        for (std::size_t i = 0; i < extra; ++i) {
            double w;
            do w = numerators[next++] / 1024.0;
            while (std::find(used.begin(), used.end(), w) != used.end());
            used.push_back(w);
            const Slot r = uniform_slot(rng, 0, std::max<Slot>(0, shape.max_horizon - 1));
            kept.push_back(job(1000 + i, r, r + uniform_slot(rng, 1, 3), w));
        }
        jobs = std::move(kept);
        break;
    }
    case 5: { // reversed weight ranking
        std::vector<double> w;
        for (const auto& j : jobs) w.push_back(j.weight);
        std::vector<std::size_t> order(jobs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
        std::vector<double> sorted = w;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        for (std::size_t i = 0; i < order.size(); ++i) jobs[order[i]].weight = sorted[i];
        break;
    }
    case 6: // empty
        jobs.clear();
        break;
    default: // everything shifted one slot later
        for (auto& j : jobs) {
            ++j.release;
            ++j.deadline;
        }
        break;
    }
    Slot needed = horizon;
    for (const auto& j : jobs) needed = std::max(needed, j.deadline);
    return Instance(std::move(jobs), needed);
}

} // namespace pktsched::testing
