#pragma once

#include <stdexcept>
#include <string>

namespace sfheat {

/// Caller violated a contract (mismatched jet centers, bad argument combination).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pole was detected where a removable singularity was required.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quadrature or series failed to meet the requested accuracy.
/// Carries the best available error estimate.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// A truncated sum ran out of terms before reaching its tolerance.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sfheat
