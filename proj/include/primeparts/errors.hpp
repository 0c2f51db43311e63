#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primeparts {

// Precondition violated by a caller-supplied argument.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A cache file that does not follow format v1.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that does not match what was requested (e.g. table kind).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure: an iteration cap hit, a quadrature that did not settle.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

class SolverError : public NumericError {
 public:
  SolverError(const std::string& what, double bracket_low, double bracket_high)
      : NumericError(what), low_(bracket_low), high_(bracket_high) {}

  double bracket_low() const noexcept { return low_; }
  double bracket_high() const noexcept { return high_; }

 private:
  double low_;
  double high_;
};

// The prime set is too short to bound the truncated tail of a prime sum.
class TruncationError : public NumericError {
 public:
  TruncationError(const std::string& what, unsigned long required_limit)
      : NumericError(what), required_limit_(required_limit) {}

  unsigned long required_limit() const noexcept { return required_limit_; }

 private:
  unsigned long required_limit_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace primeparts
