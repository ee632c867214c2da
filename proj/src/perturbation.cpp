#include "pktsched/perturbation.hpp"

#include "pktsched/errors.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace pktsched {

Instance perturb(const Instance& instance, const PerturbationSpec& spec) {
    std::vector<Job> jobs(instance.jobs().begin(), instance.jobs().end());
    std::mt19937_64 rng(spec.seed);

    if (const auto* noise = std::get_if<WeightGaussian>(&spec.kind)) {
        if (!(noise->sigma >= 0.0)) throw InvalidInstance("sigma must be nonnegative");
        if (noise->sigma > 0.0) {
            std::normal_distribution<double> error(0.0, noise->sigma);
            for (Job& job : jobs) job.weight = std::max(job.weight + error(rng), kMinPerturbedWeight);
        }
    } else {
        const auto& shift = std::get<DeadlineShift>(spec.kind);
        if (shift.k < 0) throw InvalidInstance("deadline shift k must be nonnegative");
        if (shift.k > 0) {
            std::uniform_int_distribution<Slot> error(-shift.k, shift.k);
            for (Job& job : jobs) job.deadline = std::max(job.release + 1, job.deadline + error(rng));
        }
    }
    Slot latest = instance.horizon();
    for (const Job& job : jobs) latest = std::max(latest, job.deadline);
    return Instance(std::move(jobs), latest);
}

} // namespace pktsched
