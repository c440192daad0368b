#pragma once

#include <stdexcept>
#include <string>

namespace dimlift {

/// Argument outside the mathematical domain of an operation (t <= 0, length mismatch, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A (d, n) configuration for which the requested object is not defined or not bounded.
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quadrature failed to stabilise under node doubling.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double previous, double last)
      : std::runtime_error(what), previous_(previous), last_(last) {}

  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

/// A frequency-type ratio whose denominator fell below the admissible floor.
class DegenerateDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dimlift
