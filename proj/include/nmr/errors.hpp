#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmr {

// Malformed .ael / .dt input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An enumeration would exceed one of the configured caps.
class ResourceCapError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Objects built over different vocabularies were combined.
class VocabularyMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A solver invariant was violated. Always a bug.
class InternalError : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nmr
