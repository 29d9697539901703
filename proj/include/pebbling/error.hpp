#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pebbling {

enum class ErrorKind {
  invalid_argument,
  size_limit,
  unsupported_degree,
  structure,
  illegal_move,
  replay,
  precondition,
  not_applicable,
  budget,
  parse,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::unsupported_degree: return "unsupported-degree";
    case ErrorKind::structure: return "structure";
    case ErrorKind::illegal_move: return "illegal-move";
    case ErrorKind::replay: return "replay-error";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::budget: return "budget";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

/// Base of every error thrown by the library. `kind()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by replay() when the move at `step()` (0-based) is illegal.
class ReplayError : public Error {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : Error(ErrorKind::replay, what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Raised when a brute-force search runs out of budget. Carries the bracket
/// [lower, upper] known at the time of exhaustion.
class BudgetError : public Error {
 public:
  BudgetError(std::size_t lower, std::size_t upper, const std::string& what)
      : Error(ErrorKind::budget, what), lower_(lower), upper_(upper) {}

  std::size_t lower_bound() const noexcept { return lower_; }
  std::size_t upper_bound() const noexcept { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

/// Text parse failure; `position()` is a 0-based character offset or a 1-based line number
/// depending on the input kind (see the throwing function).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::parse, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pebbling
