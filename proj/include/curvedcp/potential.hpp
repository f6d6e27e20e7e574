#pragma once

#include <array>
#include <span>
#include <vector>

#include "curvedcp/eta.hpp"
#include "curvedcp/geometry.hpp"
#include "curvedcp/polarizability.hpp"
#include "curvedcp/thermal.hpp"

namespace curvedcp {

/// Full finite-temperature potential, split by derivative order and by
/// polarizability channel. All entries are in the dimensionless
/// normalization U * pi d^4 / (hbar c) with the polarizability measured in
/// units of d^3 (for tau > 0, multiply by 2/tau to get U d^3 / k_B T).
struct PotentialBreakdown {
  double total = 0.0;

  // by number of surface derivatives
  double flat_term = 0.0;        // p = 0
  double curvature1_term = 0.0;  // p = 2
  double gradient_term = 0.0;    // p = 3
  double curvature2_term = 0.0;  // p = 4

  // by polarizability channel
  double channel_perp = 0.0;  // alpha_xx + alpha_yy
  double channel_zz = 0.0;
  double channel_zi = 0.0;    // alpha_z{x,y} against the curvature gradient
  double channel_xxyy = 0.0;  // traceless in-plane anisotropy

  double tau = 0.0;
  ValidityFlags validity;
};

/// Factor multiplying each coefficient function (in all_beta_indices()
/// order) when the expansion is contracted with this polarizability and
/// geometry; the potential is
///   U * pi d^4 / (hbar c) = -1/2 sum_i weights[i] * beta~_i(tau).
/// Works in either frame: principal geometries use the curvature form,
/// general geometries the raw-Hessian invariants. alpha is scaled by 1/d^3
/// internally.
std::array<double, 11> contraction_weights(const PolarizabilityTensor& alpha,
                                           const LocalGeometry& geom);

/// All eleven Matsubara-summed coefficients at cfg.tau (T = 0 routes to the
/// half-line integrals instead of the sum).
std::array<double, 11> beta_tilde_all(const ThermalConfig& cfg);

/// Assembles the full potential from the coefficient sums and the geometry.
/// alpha must be symmetric and expressed in geom's frame. Convergence
/// failures of the underlying sums propagate.
PotentialBreakdown u_full(const PolarizabilityTensor& alpha,
                          const LocalGeometry& geom, const ThermalConfig& cfg);

struct OrientationPoint {
  Rotation rotation;
  double energy = 0.0;  // U * pi d^4 / (hbar c)
  bool is_min = false;
};

/// Energy of a body-fixed polarizability rotated through each grid
/// orientation, over the same geometry and temperature. Exactly one row is
/// flagged as the minimum (ties resolve to the first grid point). The
/// coefficient sums are computed once and reused across the grid.
std::vector<OrientationPoint> orientation_scan(
    const PolarizabilityTensor& alpha_body, const LocalGeometry& geom,
    const ThermalConfig& cfg, std::span<const Rotation> grid);

}  // namespace curvedcp
