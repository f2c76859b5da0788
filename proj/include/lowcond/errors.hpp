#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lowcond {

// Malformed input document. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Precondition on the arguments of an operation does not hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unknown vertex index or label.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Singular or ill-conditioned matrix, failed factorization.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random model generation could not satisfy its audit.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Oracle query budget exhausted.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lowcond
