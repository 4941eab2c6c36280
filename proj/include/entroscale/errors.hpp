#pragma once

#include <stdexcept>
#include <string>

namespace entroscale {

/// Raised when caller-supplied parameters violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a floating-point invariant of the simulator is broken.
/// Carries the offending value (an eigenvalue, a trace defect, ...).
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double value)
      : std::runtime_error(what + " (value " + std::to_string(value) + ")"),
        value_(value) {}

  double value() const noexcept { return value_; }

 private:
  double value_;
};

}  // namespace entroscale
