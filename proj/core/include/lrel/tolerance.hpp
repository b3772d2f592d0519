#pragma once

#include <stdexcept>

namespace lrel {

/// Numerical thresholds shared by every predicate in the library.
///
/// rank_tol is a relative singular-value cutoff, psd_tol an eigenvalue floor
/// for semidefiniteness tests, gap_tol the projector distance below which two
/// subspaces are considered equal.
struct ToleranceConfig {
  double rank_tol = 1e-10;
  double psd_tol = 1e-10;
  double gap_tol = 1e-8;

  void validate() const {
    if (!(rank_tol >= 0.0) || !(psd_tol >= 0.0) || !(gap_tol >= 0.0)) {
      throw std::invalid_argument("ToleranceConfig: tolerances must be nonnegative");
    }
  }
};

/// Raised when operands live in incompatible ambient spaces.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's mathematical precondition does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lrel
