#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sphere {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller passed an out-of-range id, empty set, or inconsistent argument.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Malformed input data. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// File could not be opened, read, or written.
class IoError : public Error {
  public:
    using Error::Error;
};

/// The requested target is not reachable from the source.
class DisconnectedError : public Error {
  public:
    using Error::Error;
};

/// A starting/decrement/anchor rule broke its contract.
class RuleViolationError : public Error {
  public:
    using Error::Error;
};

/// Benchmark records are missing cells needed for aggregation.
class IncompleteRunError : public Error {
  public:
    using Error::Error;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InternalError : public Error {
  public:
    using Error::Error;
};

}  // namespace sphere
