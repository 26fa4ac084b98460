#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace segre {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input that parses but violates a precondition (non-homogeneous generator,
/// composite characteristic, mismatched rings, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class RingMismatchError : public ValidationError {
 public:
  RingMismatchError() : ValidationError("operands belong to different polynomial rings") {}
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero in prime field") {}
};

/// A configured cap (basis size, pair count, term count, ...) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The random choices were not general enough: a residual came out with the
/// wrong dimension.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

/// Repeated runs with derived seeds disagreed.
class InconsistentRunsError : public Error {
 public:
  InconsistentRunsError(const std::string& what, std::vector<std::vector<std::int64_t>> outputs)
      : Error(what), outputs_(std::move(outputs)) {}

  const std::vector<std::vector<std::int64_t>>& outputs() const noexcept { return outputs_; }

 private:
  std::vector<std::vector<std::int64_t>> outputs_;
};

/// An invariant of the engine itself failed (e.g. an exact division left a
/// remainder). Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace segre
