#include "curvedcp/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvedcp {

std::array<double, 11> contraction_weights(const PolarizabilityTensor& alpha,
                                           const LocalGeometry& geom) {
  if (!alpha.is_symmetric())
    throw std::invalid_argument(
        "contraction_weights: polarizability tensor must be symmetric");
  if (!(geom.d > 0.0))
    throw std::invalid_argument("contraction_weights: d must be positive");

  const double d = geom.d;
  const double s = 1.0 / (d * d * d);
  const double a_perp = alpha.perp() * s;
  const double a_zz = alpha.zz() * s;
  const double a_zx = alpha(2, 0) * s;
  const double a_zy = alpha(2, 1) * s;

  // dimensionless Hessian and third-derivative data
  double h[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h[i][j] = d * geom.hessian[i][j];
  if (geom.frame == GeomFrame::principal) {
    h[0][0] = d * geom.curvature1;
    h[1][1] = d * geom.curvature2;
    h[0][1] = h[1][0] = 0.0;
  }
  const double tx = d * d * geom.grad_lap[0];
  const double ty = d * d * geom.grad_lap[1];

  const double lap = h[0][0] + h[1][1];
  const double frob2 =
      h[0][0] * h[0][0] + 2.0 * h[0][1] * h[0][1] + h[1][1] * h[1][1];
  // traceless Hessian contracted with the in-plane polarizability block
  const double t00 = h[0][0] - 0.5 * lap;
  const double t11 = h[1][1] - 0.5 * lap;
  const double traceless_alpha = (t00 * alpha(0, 0) + t11 * alpha(1, 1) +
                                  2.0 * h[0][1] * alpha(0, 1)) *
                                 s;
  const double grad_alpha = tx * a_zx + ty * a_zy;

  // order matches all_beta_indices():
  // (0,1) (0,2) (2,1) (2,2) (2,3) (3,1) (4,1) (4,2) (4,3) (4,4) (4,5)
  return {a_perp,
          a_zz,
          lap * a_perp,
          lap * a_zz,
          traceless_alpha,
          grad_alpha,
          lap * lap * a_perp,
          lap * lap * a_zz,
          frob2 * a_perp,
          frob2 * a_zz,
          lap * traceless_alpha};
}

std::array<double, 11> beta_tilde_all(const ThermalConfig& cfg) {
  if (!(cfg.tau >= 0.0))
    throw std::domain_error("beta_tilde_all: tau must be non-negative");
  std::array<double, 11> out{};
  const auto& ids = all_beta_indices();
  if (cfg.tau == 0.0) {
    const double rel_tol = std::clamp(cfg.sum_rel_tol, 2e-14, 9e-4);
    for (size_t i = 0; i < ids.size(); ++i)
      out[i] = beta_T0_integral(ids[i], rel_tol);
  } else {
    for (size_t i = 0; i < ids.size(); ++i)
      out[i] = matsubara_beta_sum(ids[i], cfg).value;
  }
  return out;
}

namespace {

PotentialBreakdown assemble(const std::array<double, 11>& w,
                            const std::array<double, 11>& bt, double tau,
                            const LocalGeometry& geom) {
  std::array<double, 11> c{};
  for (size_t i = 0; i < c.size(); ++i) c[i] = -0.5 * w[i] * bt[i];

  PotentialBreakdown b;
  b.flat_term = c[0] + c[1];
  b.curvature1_term = c[2] + c[3] + c[4];
  b.gradient_term = c[5];
  b.curvature2_term = c[6] + c[7] + c[8] + c[9] + c[10];
  b.total = b.flat_term + b.curvature1_term + b.gradient_term +
            b.curvature2_term;

  b.channel_perp = c[0] + c[2] + c[6] + c[8];
  b.channel_zz = c[1] + c[3] + c[7] + c[9];
  b.channel_zi = c[5];
  b.channel_xxyy = c[4] + c[10];

  b.tau = tau;
  b.validity = validity_flags(geom, tau);
  return b;
}

}  // namespace

PotentialBreakdown u_full(const PolarizabilityTensor& alpha,
                          const LocalGeometry& geom,
                          const ThermalConfig& cfg) {
  const auto w = contraction_weights(alpha, geom);
  const auto bt = beta_tilde_all(cfg);
  return assemble(w, bt, cfg.tau, geom);
}

std::vector<OrientationPoint> orientation_scan(
    const PolarizabilityTensor& alpha_body, const LocalGeometry& geom,
    const ThermalConfig& cfg, std::span<const Rotation> grid) {
  if (grid.empty())
    throw std::invalid_argument("orientation_scan: empty rotation grid");
  if (!alpha_body.is_symmetric())
    throw std::invalid_argument(
        "orientation_scan: polarizability tensor must be symmetric");

  const auto bt = beta_tilde_all(cfg);
  std::vector<OrientationPoint> out;
  out.reserve(grid.size());
  size_t best = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    const PolarizabilityTensor lab = orient(alpha_body, grid[i]);
    const auto w = contraction_weights(lab, geom);
    const PotentialBreakdown b = assemble(w, bt, cfg.tau, geom);
    out.push_back({grid[i], b.total, false});
    if (out[i].energy < out[best].energy) best = i;
  }
  out[best].is_min = true;
  return out;
}

}  // namespace curvedcp
