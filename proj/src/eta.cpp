#include "curvedcp/eta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "curvedcp/potential.hpp"
#include "curvedcp/specfun.hpp"

namespace curvedcp {

ValidityFlags validity_flags(const LocalGeometry& geom, double tau) {
  ValidityFlags f;
  f.tau_within_expansion = tau <= 0.3;
  double kmax = 0.0;
  if (geom.frame == GeomFrame::principal) {
    kmax = std::max(std::abs(geom.d * geom.curvature1),
                    std::abs(geom.d * geom.curvature2));
  } else {
    for (const auto& row : geom.hessian)
      for (double h : row) kmax = std::max(kmax, std::abs(geom.d * h));
  }
  f.curvature_within_bounds = kmax <= 0.5;
  return f;
}

EtaCoefficients eta_coefficients(const LocalGeometry& geom, double tau) {
  if (geom.frame != GeomFrame::principal)
    throw std::invalid_argument(
        "eta_coefficients: geometry must be in principal form");
  if (!(geom.d > 0.0))
    throw std::invalid_argument("eta_coefficients: d must be positive");
  if (!(tau >= 0.0))
    throw std::domain_error("eta_coefficients: tau must be non-negative");

  const double k1 = geom.d * geom.curvature1;
  const double k2 = geom.d * geom.curvature2;
  const double sp = k1 + k2;
  const double sm = k1 - k2;
  const double qp = k1 * k1 + k2 * k2;
  const double qm = k1 * k1 - k2 * k2;
  const double d2 = geom.d * geom.d;
  const double gx = d2 * geom.grad_lap[0];
  const double gy = d2 * geom.grad_lap[1];

  const double t2 = tau * tau;
  const double t3 = t2 * tau;
  const double t4 = t2 * t2;
  const double t5 = t4 * tau;
  const double z3 = MathConstants::zeta3;
  const double z5 = MathConstants::zeta5;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double pi4 = pi2 * pi2;

  EtaCoefficients eta;
  eta.eta_perp = 1.0 / 8 - t4 / 360
               - sp * (3.0 / 40 - 3 * z5 * t5 / (32 * pi4))
               + sp * sp * (3.0 / 280 - 3 * z5 * t5 / (64 * pi4))
               + qp * (13.0 / 280 + t4 / 360 - 9 * z5 * t5 / (32 * pi4));

  eta.eta_zz = 1.0 / 8 + t4 / 360
             - sp * (1.0 / 15 - z3 * t3 / (8 * pi2) + t4 / 90 -
                     3 * z5 * t5 / (16 * pi4))
             - sp * sp * (1.0 / 240 - t2 / 45 + z3 * t3 / (4 * pi2) -
                          t4 / 60 + 7 * z5 * t5 / (16 * pi4))
             + qp * (3.0 / 40 - t2 / 90 + t4 / 180 - z5 * t5 / (4 * pi4));

  const double zi_factor =
      1.0 / 30 - z3 * t3 / (16 * pi2) + t4 / 180 - 3 * z5 * t5 / (32 * pi4);
  eta.eta_zi = {gx * zi_factor, gy * zi_factor};

  eta.eta_xy = -sm * (1.0 / 40 + 3 * z5 * t5 / (64 * pi4))
             + qm * (9.0 / 560 + t4 / 360 - 3 * z5 * t5 / (16 * pi4));
  return eta;
}

double u_retarded(const PolarizabilityTensor& alpha, const LocalGeometry& geom,
                  double tau) {
  if (!alpha.is_symmetric())
    throw std::invalid_argument(
        "u_retarded: polarizability tensor must be symmetric");
  const EtaCoefficients eta = eta_coefficients(geom, tau);
  const double s = 1.0 / (geom.d * geom.d * geom.d);
  return -(alpha.perp() * s * eta.eta_perp + alpha.zz() * s * eta.eta_zz +
           alpha(2, 0) * s * eta.eta_zi[0] + alpha(2, 1) * s * eta.eta_zi[1] +
           alpha.xx_minus_yy() * s * eta.eta_xy);
}

double u_classical(const PolarizabilityTensor& alpha,
                   const LocalGeometry& geom) {
  if (!alpha.is_symmetric())
    throw std::invalid_argument(
        "u_classical: polarizability tensor must be symmetric");
  const auto w = contraction_weights(alpha, geom);
  const auto& ids = all_beta_indices();
  double s = 0.0;
  for (size_t i = 0; i < ids.size(); ++i) s += w[i] * beta_classical(ids[i]);
  return -0.5 * s;
}

}  // namespace curvedcp
