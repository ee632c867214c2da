#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace pktsched {

/// Shortest decimal form that reads back to the same double; "inf" for
/// infinity. Used for every number written to CSV so output is reproducible.
inline std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, end);
}

} // namespace pktsched
