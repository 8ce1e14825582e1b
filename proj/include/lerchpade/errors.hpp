#pragma once

#include <stdexcept>
#include <string>

namespace lerchpade {

/// Raised when caller-supplied data violates a documented precondition or
/// domain invariant (duplicate points, zero divisors, out-of-range indices).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact identity that must hold turns out false. Carries a
/// short machine-readable tag naming the failed check.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(std::string check, const std::string& detail)
      : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace lerchpade
