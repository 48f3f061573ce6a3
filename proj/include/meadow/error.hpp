#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace meadow {

/// Caller misuse: model mismatch, unbound variable, unknown model name, ...
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value outside an operation's domain (zero polynomial passed to radical, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Syntax error in a term or value literal. `column` is 1-based, counted in code points.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error("column " + std::to_string(column) + ": " + message), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace meadow
