#pragma once

#include "pktsched/instance.hpp"

#include <filesystem>
#include <iosfwd>

namespace pktsched {

// Instance CSV:
//
//   # horizon=T            (optional, before the header)
//   id,release,deadline,weight
//   0,0,1,0.01
//
// Ids are unsigned integers. Other '#' lines and blank lines are ignored.
// Errors are reported as ParseError (line numbers are 1-based) or, for
// well-formed rows that violate the model, InvalidInstance.

Instance read_instance_csv(std::istream& in);
Instance read_instance_csv(const std::filesystem::path& path);

void write_instance_csv(std::ostream& out, const Instance& instance);
void write_instance_csv(const std::filesystem::path& path, const Instance& instance);

} // namespace pktsched
