#pragma once

#include "pktsched/instance.hpp"
#include "pktsched/offline_opt.hpp"
#include "pktsched/schedule.hpp"

#include <optional>
#include <vector>

namespace pktsched {

/// Per-slot job choices taken from the canonical optimum of a predicted
/// instance. Choices are bound to job ids, so they can be replayed against
/// any realization that shares those ids.
class ChoiceSequence {
public:
    ChoiceSequence() = default;
    explicit ChoiceSequence(std::vector<std::optional<JobId>> choices);

    /// The choice for slot t; none for dummy slots and slots past the end.
    std::optional<JobId> at(Slot t) const noexcept;
    std::size_t size() const noexcept { return choices_.size(); }
    const std::vector<std::optional<JobId>>& choices() const noexcept { return choices_; }

    friend bool operator==(const ChoiceSequence&, const ChoiceSequence&) = default;

private:
    std::vector<std::optional<JobId>> choices_;
};

ChoiceSequence build_choices(const Instance& prediction);

/// Replays `choices` on `realization`: slot t gets the chosen job when it
/// exists, has not been placed yet and is feasible at t; otherwise a dummy.
/// No rescheduling is attempted.
Schedule apply_choices(const ChoiceSequence& choices, const Instance& realization);

/// The prediction error
///
///   eta = max over t of W(OPT(J<=t) restricted to [0,t]) / W(S(J) restricted to [0,t])
///
/// where S(J) replays the prediction's optimal choices on the realization.
/// Per slot, 0/0 counts as 1 and x/0 as +inf.
double prediction_error(const Instance& realization, const Instance& prediction);

/// Same measure from precomputed parts (series and replayed schedule share a horizon).
double prediction_error(const PrefixOptSeries& prefix_opt, const Schedule& followed);

/// Follows the prediction blindly; 1-consistent but not robust.
Schedule blind_follow(const Instance& prediction, const Instance& realization);

} // namespace pktsched
