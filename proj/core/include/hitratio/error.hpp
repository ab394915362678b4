#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hitratio {

/// Base for every error raised by the library. Each subclass maps onto one
/// process exit status of the command-line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: corpus lines, evaluation records, embedding files.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  /// 1-based line number, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Invalid options or inconsistent configuration (bad k, threshold,
/// backend mismatch, infeasible sweep rows, duplicate labels).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operation received, or produced, an empty set where data is required.
class EmptyResultError : public Error {
 public:
  using Error::Error;
};

/// Vectors of different lengths were combined.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

}  // namespace hitratio
