#include "pktsched/snap_ingest.hpp"

#include "pktsched/errors.hpp"
#include "pktsched/instance_io.hpp"
#include "pktsched/seeding.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <string_view>

namespace pktsched {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Howard Hinnant's days_from_civil / civil_from_days.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct CivilDate {
    std::int64_t year;
    unsigned month;
    unsigned day;
};

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return {y + (m <= 2), m, d};
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size() && !text.empty();
}

bool parse_iso8601(std::string_view text, std::int64_t& seconds) {
    // YYYY-MM-DDTHH:MM:SS with optional trailing Z
    if (text.ends_with('Z')) text.remove_suffix(1);
    if (text.size() != 19 || text[4] != '-' || text[7] != '-' || text[10] != 'T' || text[13] != ':' ||
        text[16] != ':')
        return false;
    std::int64_t year = 0;
    unsigned month = 0, day = 0, hour = 0, minute = 0, second = 0;
    if (!parse_number(text.substr(0, 4), year) || !parse_number(text.substr(5, 2), month) ||
        !parse_number(text.substr(8, 2), day) || !parse_number(text.substr(11, 2), hour) ||
        !parse_number(text.substr(14, 2), minute) || !parse_number(text.substr(17, 2), second))
        return false;
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60) return false;
    seconds = days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
    return true;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    auto separator = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && separator(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !separator(line[i])) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

} // namespace

std::vector<DayInstance> ingest_snap_events(std::istream& in, const SnapIngestOptions& options) {
    if (options.day_seconds <= 0) throw ConfigError("day_seconds must be positive");
    if (options.slots_per_day < 1) throw ConfigError("slots_per_day must be positive");
    if (options.min_events > options.max_events) throw ConfigError("min_events exceeds max_events");
    if (options.day_seconds > (std::int64_t{1} << 62) / options.slots_per_day)
        throw ConfigError("day_seconds * slots_per_day is too large");

    std::map<std::int64_t, std::vector<std::int64_t>> by_day;
    std::size_t events = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = raw;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#' || line[first] == '%') continue;
        const auto fields = split_fields(line);
        if (fields.size() <= options.timestamp_column)
            throw ParseError(line_no, "no field " + std::to_string(options.timestamp_column));
        const std::string_view token = fields[options.timestamp_column];
        std::int64_t seconds = 0;
        if (!parse_number(token, seconds) && !parse_iso8601(token, seconds))
            throw ParseError(line_no, "bad timestamp '" + std::string(token) + "'");
        by_day[floor_div(seconds, options.day_seconds)].push_back(seconds);
        ++events;
    }
    if (events == 0) throw EmptyDataset("no events in input");

    std::vector<DayInstance> days;
    for (auto& [day, stamps] : by_day) {
        if (stamps.size() < options.min_events || stamps.size() > options.max_events) continue;
        std::sort(stamps.begin(), stamps.end());
        const std::int64_t day_start = day * options.day_seconds;
        std::vector<Slot> releases;
        releases.reserve(stamps.size());
        for (std::int64_t stamp : stamps) {
            const std::int64_t offset = stamp - day_start;
            const Slot slot = offset * options.slots_per_day / options.day_seconds + 1;
            releases.push_back(std::clamp<Slot>(slot, 1, options.slots_per_day));
        }
        std::mt19937_64 rng(derive_seed(options.seed, {static_cast<std::uint64_t>(day)}));
        days.push_back({day, Instance(synthesize_jobs(releases, options.attributes, rng))});
    }
    if (days.empty())
        throw EmptyDataset("no day has between " + std::to_string(options.min_events) + " and " +
                           std::to_string(options.max_events) + " events");
    return days;
}

std::vector<DayInstance> ingest_snap_events(const std::filesystem::path& path, const SnapIngestOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return ingest_snap_events(in, options);
}

std::string format_day(std::int64_t day) {
    const CivilDate date = civil_from_days(day);
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%04lld-%02u-%02u", static_cast<long long>(date.year), date.month, date.day);
    return buffer;
}

std::vector<std::filesystem::path> write_day_instances(const std::filesystem::path& dir,
                                                       const std::vector<DayInstance>& days) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> paths;
    for (const auto& day : days) {
        auto path = dir / ("day_" + format_day(day.day) + ".csv");
        write_instance_csv(path, day.instance);
        paths.push_back(std::move(path));
    }
    return paths;
}

} // namespace pktsched
