#pragma once

#include "pktsched/instance.hpp"
#include "pktsched/schedule.hpp"

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pktsched {

inline constexpr double kGoldenRatio = std::numbers::phi;

// Step rules. Each takes the current buffer (released, unprocessed, feasible
// jobs) and names the job to send, or none when the buffer is empty.

/// Heaviest job.
std::optional<JobId> greedy_step(std::span<const Job> buffer);

/// Earliest deadline; ties go to the heavier job.
std::optional<JobId> edf_step(std::span<const Job> buffer);

/// Earliest deadline among jobs weighing at least alpha times the heaviest.
std::optional<JobId> edf_alpha_step(std::span<const Job> buffer, double alpha);

/// Modified Greedy: e is the earliest-deadline non-dominated job and h the
/// heaviest; sends e when w_e >= w_h / phi, otherwise h.
std::optional<JobId> mg_step(std::span<const Job> buffer);

/// A memoryless online rule together with its advertised competitive ratio.
class OnlinePolicy {
public:
    enum class Kind { Greedy, Edf, EdfAlpha, ModifiedGreedy };

    static OnlinePolicy greedy() { return OnlinePolicy(Kind::Greedy, 1.0); }
    static OnlinePolicy edf() { return OnlinePolicy(Kind::Edf, 1.0); }
    static OnlinePolicy edf_alpha(double alpha);
    static OnlinePolicy modified_greedy() { return OnlinePolicy(Kind::ModifiedGreedy, 1.0); }

    /// Accepts "greedy", "edf", "edf-alpha:<alpha>", "mg". Throws InvalidPolicy.
    static OnlinePolicy parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    std::string name() const;

    /// gamma_on: 2 for Greedy and EDF_alpha, phi for MG, +inf for EDF.
    double gamma() const noexcept;

    /// Whether gamma() is a proven bound on agreeable instances (Greedy, MG).
    bool has_proven_bound() const noexcept;

    std::optional<JobId> step(std::span<const Job> buffer) const;

private:
    OnlinePolicy(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

    Kind kind_;
    double alpha_;
};

/// Drives a policy over slots [0, horizon] without predictions.
Schedule run_online(const OnlinePolicy& policy, const Instance& instance);

} // namespace pktsched
