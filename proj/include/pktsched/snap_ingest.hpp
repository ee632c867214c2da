#pragma once

#include "pktsched/generators.hpp"
#include "pktsched/instance.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace pktsched {

/// Turning a timestamped event log (SNAP temporal edge lists, check-in logs)
/// into one instance per busy calendar day.
struct SnapIngestOptions {
    std::size_t timestamp_column = 2;  // 0-based; fields split on whitespace or commas
    std::int64_t day_seconds = 86400;
    Slot slots_per_day = 75;
    std::size_t min_events = 300;      // inclusive band of events per day
    std::size_t max_events = 500;
    AttributeModel attributes;
    std::uint64_t seed = 0;
};

struct DayInstance {
    std::int64_t day = 0;  // days since the UNIX epoch (UTC)
    Instance instance;
};

/// Lines starting with '#' or '%' and blank lines are skipped. The
/// timestamp is either integer UNIX seconds or ISO-8601 "YYYY-MM-DDTHH:MM:SSZ".
/// Within a day, event times map linearly onto release slots 1..slots_per_day;
/// weights and deadlines are synthesized from `attributes` with a per-day
/// seed derived from `seed` and the day number.
///
/// Throws ParseError for malformed lines and EmptyDataset when there are no
/// events or no day falls inside the band.
std::vector<DayInstance> ingest_snap_events(std::istream& in, const SnapIngestOptions& options);
std::vector<DayInstance> ingest_snap_events(const std::filesystem::path& path, const SnapIngestOptions& options);

/// "YYYY-MM-DD" for a day number.
std::string format_day(std::int64_t day);

/// Writes day_<YYYY-MM-DD>.csv per instance into `dir` (created if missing)
/// and returns the paths in day order.
std::vector<std::filesystem::path> write_day_instances(const std::filesystem::path& dir,
                                                       const std::vector<DayInstance>& days);

} // namespace pktsched
