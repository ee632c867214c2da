#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pktsched {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A job or instance violates the model (bad window, negative weight,
/// duplicate id, horizon too short).
class InvalidInstance : public Error {
public:
    using Error::Error;
};

class InfeasibleSelection : public Error {
public:
    using Error::Error;
};

/// Raised by the exhaustive oracle when the input exceeds its size guard.
class TooLarge : public Error {
public:
    using Error::Error;
};

class InvalidThreshold : public Error {
public:
    using Error::Error;
};

class InvalidSchedule : public Error {
public:
    using Error::Error;
};

class InvalidPolicy : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class EmptyDataset : public Error {
public:
    using Error::Error;
};

/// Malformed input line. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace pktsched
