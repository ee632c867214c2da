#include "pktsched/lap.hpp"

#include "pktsched/core.hpp"
#include "pktsched/errors.hpp"
#include "pktsched/format.hpp"

#include <ostream>
#include <stdexcept>

namespace pktsched {

namespace {

void check_threshold(double rho) {
    if (!(rho >= 1.0)) throw InvalidThreshold("threshold rho must be at least 1, got " + format_number(rho));
}

} // namespace

const char* to_string(ChoiceSource source) noexcept {
    return source == ChoiceSource::Prediction ? "prediction" : "online";
}

Slot LapTrace::switch_point() const noexcept {
    Slot point = 0;
    for (const auto& record : slots)
        if (record.local_ratio && *record.local_ratio <= record.threshold) point = record.t + 1;
    return point;
}

std::size_t LapTrace::switch_backs() const noexcept {
    std::size_t count = 0;
    bool followed = false;
    bool left = false;
    for (const auto& record : slots) {
        if (record.source == ChoiceSource::Prediction) {
            if (followed && left) ++count;
            followed = true;
            left = false;
        } else if (followed) {
            left = true;
        }
    }
    return count;
}

LocalTestResult local_test(const PrefixOptSeries& prefix_opt, double processed_weight, double candidate_weight,
                           Slot t, double rho) {
    check_threshold(rho);
    const double ratio = weight_ratio(prefix_opt.at(t), processed_weight + candidate_weight);
    return {ratio <= rho, ratio};
}

LapResult lap_run(const ChoiceSequence& choices, const Instance& realization, const PrefixOptSeries& prefix_opt,
                  double rho, const OnlinePolicy& fallback) {
    check_threshold(rho);
    if (prefix_opt.horizon() != realization.horizon())
        throw std::invalid_argument("prefix series horizon does not match the realization");

    LapResult result{Schedule(realization.horizon()), {}};
    result.trace.slots.reserve(static_cast<std::size_t>(realization.horizon()) + 1);
    JobIdSet processed;
    double processed_weight = 0.0;

    for (Slot t = 0; t <= realization.horizon(); ++t) {
        LapSlotRecord record;
        record.t = t;
        record.threshold = rho;

        const Job* candidate = nullptr;
        if (const auto id = choices.at(t)) {
            const Job* job = realization.find(*id);
            if (job && !processed.contains(*id) && feasible_at(*job, t)) candidate = job;
        }

        const Job* chosen = nullptr;
        if (candidate) {
            const auto test = local_test(prefix_opt, processed_weight, candidate->weight, t, rho);
            record.local_ratio = test.ratio;
            if (test.passed) {
                chosen = candidate;
                record.source = ChoiceSource::Prediction;
            }
        }
        if (!chosen) {
            record.source = ChoiceSource::Online;
            const auto buffer = pending_set(realization, processed, t);
            if (const auto id = fallback.step(buffer)) chosen = realization.find(*id);
        }

        if (chosen) {
            result.schedule.assign(t, *chosen);
            processed.insert(chosen->id);
            processed_weight += chosen->weight;
            record.chosen = chosen->id;
            record.weight = chosen->weight;
        }
        result.trace.slots.push_back(record);
    }
    return result;
}

LapResult lap_run(const Instance& prediction, const Instance& realization, double rho, const OnlinePolicy& fallback) {
    check_threshold(rho);
    return lap_run(build_choices(prediction), realization, prefix_opt_series(realization), rho, fallback);
}

void write_trace_csv(std::ostream& out, const LapTrace& trace) {
    out << "t,source,job_id,weight,local_ratio\n";
    for (const auto& record : trace.slots) {
        out << record.t << ',' << to_string(record.source) << ',';
        if (record.chosen) out << record.chosen->value;
        out << ',' << format_number(record.weight) << ',';
        if (record.local_ratio) out << format_number(*record.local_ratio);
        out << '\n';
    }
}

} // namespace pktsched
