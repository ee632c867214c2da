#pragma once

#include "pktsched/instance.hpp"
#include "pktsched/offline_opt.hpp"
#include "pktsched/online.hpp"
#include "pktsched/prediction.hpp"
#include "pktsched/schedule.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace pktsched {

enum class ChoiceSource { Prediction, Online };

const char* to_string(ChoiceSource source) noexcept;

struct LapSlotRecord {
    Slot t = 0;
    ChoiceSource source = ChoiceSource::Online;
    std::optional<JobId> chosen;          // none: dummy
    double weight = 0.0;                  // weight of the chosen job
    std::optional<double> local_ratio;    // none: test not evaluated
    double threshold = 1.0;
};

struct LapTrace {
    std::vector<LapSlotRecord> slots;

    /// One past the last slot whose local test passed, or 0 if none did.
    Slot switch_point() const noexcept;

    /// Number of Prediction -> Online -> Prediction returns.
    std::size_t switch_backs() const noexcept;
};

struct LocalTestResult {
    bool passed = false;
    double ratio = 1.0;
};

/// Compares the prefix optimum at t with the weight processed so far plus
/// the predicted candidate: passes when the ratio is at most rho.
/// Throws InvalidThreshold when rho < 1.
LocalTestResult local_test(const PrefixOptSeries& prefix_opt, double processed_weight, double candidate_weight,
                           Slot t, double rho);

struct LapResult {
    Schedule schedule;
    LapTrace trace;
};

/// Runs LAP on `realization` with the optimal choices of `prediction`.
///
/// At every slot the predicted job, when it is in the realization, not yet
/// processed and feasible now, is sent if the local test passes. Any other
/// case hands the slot to `fallback`, which sees the current buffer; the
/// next slot may return to the prediction. Throws InvalidThreshold when
/// rho < 1.
LapResult lap_run(const Instance& prediction, const Instance& realization, double rho, const OnlinePolicy& fallback);

/// Same, with the choice sequence and the realization's prefix series
/// already computed (series horizon must match the realization's).
LapResult lap_run(const ChoiceSequence& choices, const Instance& realization, const PrefixOptSeries& prefix_opt,
                  double rho, const OnlinePolicy& fallback);

/// CSV with columns t,source,job_id,weight,local_ratio. Dummy slots leave
/// job_id empty; slots without a local test leave local_ratio empty.
void write_trace_csv(std::ostream& out, const LapTrace& trace);

} // namespace pktsched
