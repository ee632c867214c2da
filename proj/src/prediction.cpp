#include "pktsched/prediction.hpp"

#include "pktsched/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace pktsched {

ChoiceSequence::ChoiceSequence(std::vector<std::optional<JobId>> choices) : choices_(std::move(choices)) {
    JobIdSet seen;
    for (const auto& choice : choices_)
        if (choice && !seen.insert(*choice).second)
            throw std::invalid_argument("choice sequence repeats job " + std::to_string(choice->value));
}

std::optional<JobId> ChoiceSequence::at(Slot t) const noexcept {
    if (t < 0 || static_cast<std::size_t>(t) >= choices_.size()) return std::nullopt;
    return choices_[static_cast<std::size_t>(t)];
}

ChoiceSequence build_choices(const Instance& prediction) {
    const Schedule optimum = opt_schedule(prediction);
    std::vector<std::optional<JobId>> choices(optimum.slot_count());
    for (Slot t = 0; t <= optimum.horizon(); ++t)
        if (const auto& job = optimum.at(t)) choices[static_cast<std::size_t>(t)] = job->id;
    return ChoiceSequence(std::move(choices));
}

Schedule apply_choices(const ChoiceSequence& choices, const Instance& realization) {
    Schedule schedule(realization.horizon());
    JobIdSet placed;
    for (Slot t = 0; t <= realization.horizon(); ++t) {
        const auto id = choices.at(t);
        if (!id) continue;
        const Job* job = realization.find(*id);
        if (!job || placed.contains(*id) || !feasible_at(*job, t)) continue;
        schedule.assign(t, *job);
        placed.insert(*id);
    }
    return schedule;
}

double prediction_error(const PrefixOptSeries& prefix_opt, const Schedule& followed) {
    const Slot horizon = std::min(prefix_opt.horizon(), followed.horizon());
    double eta = 1.0;
    bool any_positive = false;
    double followed_weight = 0.0;
    double worst = 0.0;
    for (Slot t = 0; t <= horizon; ++t) {
        if (const auto& job = followed.at(t)) followed_weight += job->weight;
        const double numerator = prefix_opt.at(t);
        if (numerator > 0.0) any_positive = true;
        worst = std::max(worst, weight_ratio(numerator, followed_weight));
    }
    if (any_positive) eta = worst;
    return eta;
}

double prediction_error(const Instance& realization, const Instance& prediction) {
    const PrefixOptSeries series = prefix_opt_series(realization);
    const Schedule followed = apply_choices(build_choices(prediction), realization);
    return prediction_error(series, followed);
}

Schedule blind_follow(const Instance& prediction, const Instance& realization) {
    return apply_choices(build_choices(prediction), realization);
}

} // namespace pktsched
