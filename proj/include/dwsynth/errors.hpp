#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dwsynth {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file, unknown name, bad CLI argument.
class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// Syntax error with source position (1-based line/column).
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : InputError(msg + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A position was played on a process pool its player does not own.
class OwnershipError : public InputError {
 public:
  explicit OwnershipError(const std::string& msg) : InputError(msg) {}
};

// An exact computation would exceed its configured resource budget.
// Raised instead of ever returning a truncated (possibly wrong) answer.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

enum class StepErrorKind {
  UnknownTransition,
  WrongSourceState,
  DecrementAtZero,
  ZeroTestNonzero,
};

// Violation of the counter-machine step relation.
class StepError : public Error {
 public:
  StepError(StepErrorKind kind, const std::string& msg,
            std::optional<std::size_t> step_index = std::nullopt)
      : Error(msg), kind_(kind), step_index_(step_index) {}

  StepErrorKind kind() const { return kind_; }
  std::optional<std::size_t> step_index() const { return step_index_; }

 private:
  StepErrorKind kind_;
  std::optional<std::size_t> step_index_;
};

}  // namespace dwsynth
