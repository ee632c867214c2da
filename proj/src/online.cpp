#include "pktsched/online.hpp"

#include "pktsched/core.hpp"
#include "pktsched/errors.hpp"
#include "pktsched/format.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace pktsched {

namespace {

const Job* heaviest(std::span<const Job> buffer) {
    if (buffer.empty()) return nullptr;
    return &*std::max_element(buffer.begin(), buffer.end(), [](const Job& a, const Job& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.id > b.id;
    });
}

const Job* earliest(std::span<const Job> buffer) {
    if (buffer.empty()) return nullptr;
    return &*std::min_element(buffer.begin(), buffer.end(), canonical_before);
}

std::optional<JobId> id_of(const Job* job) {
    if (!job) return std::nullopt;
    return job->id;
}

} // namespace

std::optional<JobId> greedy_step(std::span<const Job> buffer) {
    return id_of(heaviest(buffer));
}

std::optional<JobId> edf_step(std::span<const Job> buffer) {
    return id_of(earliest(buffer));
}

std::optional<JobId> edf_alpha_step(std::span<const Job> buffer, double alpha) {
    const Job* h = heaviest(buffer);
    if (!h) return std::nullopt;
    const double cutoff = alpha * h->weight;
    const Job* best = nullptr;
    for (const Job& job : buffer)
        if (job.weight >= cutoff && (!best || canonical_before(job, *best))) best = &job;
    return id_of(best);
}

std::optional<JobId> mg_step(std::span<const Job> buffer) {
    const Job* e = earliest(buffer);
    const Job* h = heaviest(buffer);
    if (!e) return std::nullopt;
    return e->weight >= h->weight / kGoldenRatio ? e->id : h->id;
}

OnlinePolicy OnlinePolicy::edf_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidPolicy("EDF_alpha needs alpha in (0, 1]");
    return OnlinePolicy(Kind::EdfAlpha, alpha);
}

OnlinePolicy OnlinePolicy::parse(std::string_view text) {
    if (text == "greedy") return greedy();
    if (text == "edf") return edf();
    if (text == "mg") return modified_greedy();
    constexpr std::string_view prefix = "edf-alpha:";
    if (text.starts_with(prefix)) {
        const std::string_view number = text.substr(prefix.size());
        double alpha = 0.0;
        auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), alpha);
        if (ec != std::errc{} || ptr != number.data() + number.size())
            throw InvalidPolicy("bad alpha in '" + std::string(text) + "'");
        return edf_alpha(alpha);
    }
    throw InvalidPolicy("unknown policy '" + std::string(text) + "' (greedy|edf|edf-alpha:<a>|mg)");
}

std::string OnlinePolicy::name() const {
    switch (kind_) {
    case Kind::Greedy: return "greedy";
    case Kind::Edf: return "edf";
    case Kind::EdfAlpha: return "edf-alpha:" + format_number(alpha_);
    case Kind::ModifiedGreedy: return "mg";
    }
    return "?";
}

double OnlinePolicy::gamma() const noexcept {
    switch (kind_) {
    case Kind::Greedy: return 2.0;
    case Kind::EdfAlpha: return 2.0;
    case Kind::ModifiedGreedy: return kGoldenRatio;
    case Kind::Edf: break;
    }
    return std::numeric_limits<double>::infinity();
}

bool OnlinePolicy::has_proven_bound() const noexcept {
    return kind_ == Kind::Greedy || kind_ == Kind::ModifiedGreedy;
}

std::optional<JobId> OnlinePolicy::step(std::span<const Job> buffer) const {
    switch (kind_) {
    case Kind::Greedy: return greedy_step(buffer);
    case Kind::Edf: return edf_step(buffer);
    case Kind::EdfAlpha: return edf_alpha_step(buffer, alpha_);
    case Kind::ModifiedGreedy: return mg_step(buffer);
    }
    return std::nullopt;
}

Schedule run_online(const OnlinePolicy& policy, const Instance& instance) {
    Schedule schedule(instance.horizon());
    JobIdSet processed;
    for (Slot t = 0; t <= instance.horizon(); ++t) {
        const auto buffer = pending_set(instance, processed, t);
        const auto chosen = policy.step(buffer);
        if (!chosen) continue;
        schedule.assign(t, *instance.find(*chosen));
        processed.insert(*chosen);
    }
    return schedule;
}

} // namespace pktsched
