#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gqd {

/// Input rejected by a precondition check. `property()` names the violated
/// property ("trace", "hermiticity", "positivity", "dimension", ...).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string property, const std::string& detail)
      : std::invalid_argument(property + ": " + detail), property_(std::move(property)) {}

  const std::string& property() const noexcept { return property_; }

 private:
  std::string property_;
};

/// An iterative routine exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed state file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : std::runtime_error("line " + std::to_string(line) + ": " + detail), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gqd
