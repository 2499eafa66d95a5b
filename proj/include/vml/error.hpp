#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vml {

enum class ErrorCode {
  InvalidArgument,
  InvalidTorus,
  InvalidGrid,
  InvalidField,
  InvalidDivisor,
  EmptyDivisor,
  BradlowViolation,
  NoConvergence,
  InvalidDegree,
  PartitionMismatch,
  DegenerateHyperplane,
  DuplicatePoint,
  SupportMismatch,
  InsufficientHypotheses,
  OutOfScopeDegree,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure reported by the library. The code is
/// what callers (and the CLI exit-status mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError,
              message + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vml
