#pragma once

#include <span>
#include <vector>

#include "curvedcp/beta_table.hpp"

namespace curvedcp {

/// Dimensionless temperature and summation controls.
/// tau = d / lambda_T with lambda_T = hbar c / (2 pi k_B T); the rescaled
/// Matsubara wave numbers are xi_n = n tau. tau = 0 is the quantum limit and
/// is served by beta_T0_integral, never by the sum.
struct ThermalConfig {
  double tau = 0.0;
  double sum_rel_tol = 1e-12;
  long max_terms = 1000000;
};

struct BetaSumResult {
  double value = 0.0;
  long terms_used = 0;
  /// Rigorous bound on the truncated tail; <= sum_rel_tol * |value| on success.
  double truncation_bound = 0.0;
};

/// The primed Matsubara sum
///   beta~(tau) = tau [ beta(0)/2 + sum_{n>=1} beta(n tau) ],
/// truncated once the envelope-based tail bound drops below
/// sum_rel_tol * |partial sum|.
///
/// Throws std::domain_error for tau <= 0 and ConvergenceError (with the
/// partial value) if max_terms is hit first — which can happen arbitrarily
/// close to a zero crossing of beta~, where no finite truncation can satisfy
/// a relative criterion.
BetaSumResult matsubara_beta_sum(BetaIndex idx, const ThermalConfig& cfg);

/// Zero-temperature limit beta~(0) = \int_0^infty beta(xi) dxi via
/// quad_halfline at the given relative tolerance.
double beta_T0_integral(BetaIndex idx, double rel_tol);

/// beta^{(p)}_q(0), exactly (the n = 0 Matsubara term; the classical free
/// energy applies its 1/2 weight at assembly time, not here).
double beta_classical(BetaIndex idx);

struct NormalizedCurvePoint {
  double tau = 0.0;
  double beta_tilde = 0.0;
  double ratio = 0.0;  // beta~(tau) / beta~(0)
};

/// The normalized temperature-dependence curve beta~(tau)/beta~(0) on a
/// strictly positive, sorted tau grid. Convergence failures propagate as
/// ConvergenceError; a vanishing beta~(0) (not possible for any table row)
/// would be a domain error.
std::vector<NormalizedCurvePoint> normalized_beta_curve(
    BetaIndex idx, std::span<const double> tau_grid, const ThermalConfig& cfg);

}  // namespace curvedcp
