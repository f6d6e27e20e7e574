#pragma once

#include <stdexcept>
#include <string>

namespace curvedcp {

/// Thrown when an iterative scheme (quadrature panel refinement, Matsubara
/// summation) hits its subdivision/term cap before reaching the requested
/// tolerance. Carries the best estimate obtained so far and a bound on its
/// error so callers can decide whether the partial result is usable.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double error_bound)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_bound_(error_bound) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

}  // namespace curvedcp
