#include "pktsched/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace pktsched {

Schedule::Schedule(Slot horizon) {
    if (horizon < 0) throw std::invalid_argument("schedule horizon must be nonnegative");
    slots_.resize(static_cast<std::size_t>(horizon) + 1);
}

double Schedule::weight(std::optional<Slot> upto) const {
    std::size_t end = slots_.size();
    if (upto) {
        if (*upto < 0) return 0.0;
        end = std::min(end, static_cast<std::size_t>(*upto) + 1);
    }
    double total = 0.0;
    for (std::size_t t = 0; t < end; ++t)
        if (slots_[t]) total += slots_[t]->weight;
    return total;
}

std::vector<JobId> Schedule::job_ids() const {
    std::vector<JobId> ids;
    for (const auto& slot : slots_)
        if (slot) ids.push_back(slot->id);
    return ids;
}

JobIdSet Schedule::job_id_set() const {
    JobIdSet ids;
    for (const auto& slot : slots_)
        if (slot) ids.insert(slot->id);
    return ids;
}

std::size_t Schedule::job_count() const {
    return static_cast<std::size_t>(std::count_if(slots_.begin(), slots_.end(), [](const auto& s) { return s.has_value(); }));
}

} // namespace pktsched
