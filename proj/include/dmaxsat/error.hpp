#pragma once

#include <stdexcept>
#include <string>

namespace dmaxsat {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variable index outside a formula's declared scope, or an assignment of the
/// wrong length.
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// Numeric parameter outside its admissible range (c > 2^n, delta > 2^(n-1), ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operands that must share a scope do not.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured variable limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

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

}  // namespace dmaxsat
