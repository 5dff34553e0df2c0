#pragma once

#include <stdexcept>

namespace casent {

/// Quadrature or Matsubara summation failed to reach the requested tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |Delta F| fell below the combined error estimate of its two halves;
/// tolerances must be tightened before the value is usable.
struct CancellationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Asymptotic fit rejected: regime violation or poor linearity.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace casent
