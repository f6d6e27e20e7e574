#include "curvedcp/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curvedcp/errors.hpp"

namespace curvedcp {

BetaSumResult matsubara_beta_sum(BetaIndex idx, const ThermalConfig& cfg) {
  const double tau = cfg.tau;
  if (!(tau > 0.0))
    throw std::domain_error(
        "matsubara_beta_sum: tau must be positive (tau = 0 is "
        "beta_T0_integral's job)");
  if (!(cfg.sum_rel_tol > 0.0))
    throw std::domain_error("matsubara_beta_sum: sum_rel_tol must be positive");

  double partial = 0.5 * beta_classical(idx);
  // Tail after term n: sum_{m>n} |beta(m tau)| <= env(n tau) / (e^tau - 1),
  // valid once n tau clears the envelope's validity threshold (the envelope
  // is C(x) e^{-2x} with deg C <= 5, so successive terms shrink by at least
  // e^{-tau} there).
  const double geom = std::expm1(tau);

  for (long n = 1; n <= cfg.max_terms; ++n) {
    const double x = static_cast<double>(n) * tau;
    partial += beta_eval(idx, x);
    if (x >= kBetaAsymptoticMin) {
      const double tail = beta_abs_envelope(idx, x) / geom;
      if (tail <= cfg.sum_rel_tol * std::abs(partial)) {
        return BetaSumResult{tau * partial, n + 1, tau * tail};
      }
    }
  }

  const double x_last = static_cast<double>(cfg.max_terms) * tau;
  const double tail =
      x_last >= kBetaAsymptoticMin ? beta_abs_envelope(idx, x_last) / geom
                                   : std::abs(partial);
  throw ConvergenceError(
      "matsubara_beta_sum: max_terms reached before the tail bound met "
      "sum_rel_tol",
      tau * partial, tau * tail);
}

double beta_T0_integral(BetaIndex idx, double rel_tol) {
  const TailEnvelope env = beta_quad_envelope(idx);
  return quad_halfline([idx](double x) { return beta_eval(idx, x); }, rel_tol,
                       env);
}

double beta_classical(BetaIndex idx) {
  return beta_poly(idx).exp_part.front().to_double();
}

std::vector<NormalizedCurvePoint> normalized_beta_curve(
    BetaIndex idx, std::span<const double> tau_grid, const ThermalConfig& cfg) {
  for (size_t i = 0; i < tau_grid.size(); ++i) {
    if (!(tau_grid[i] > 0.0))
      throw std::domain_error("normalized_beta_curve: tau grid must be "
                              "strictly positive");
    if (i > 0 && !(tau_grid[i] > tau_grid[i - 1]))
      throw std::domain_error("normalized_beta_curve: tau grid must be sorted "
                              "strictly increasing");
  }
  const double quad_tol = std::clamp(cfg.sum_rel_tol, 2e-14, 9e-4);
  const double t0 = beta_T0_integral(idx, quad_tol);
  if (t0 == 0.0)
    throw std::domain_error("normalized_beta_curve: beta~(0) vanishes");

  std::vector<NormalizedCurvePoint> out;
  out.reserve(tau_grid.size());
  for (double tau : tau_grid) {
    ThermalConfig point_cfg = cfg;
    point_cfg.tau = tau;
    const BetaSumResult s = matsubara_beta_sum(idx, point_cfg);
    out.push_back({tau, s.value, s.value / t0});
  }
  return out;
}

}  // namespace curvedcp
