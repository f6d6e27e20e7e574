#pragma once

#include <array>

#include "curvedcp/geometry.hpp"
#include "curvedcp/polarizability.hpp"

namespace curvedcp {

/// Dimensionless coefficients of the retarded potential
///   U = -(hbar c / pi d^4) [ a_perp eta_perp + a_zz eta_zz
///                            + a_zx eta_zi[0] + a_zy eta_zi[1]
///                            + (a_xx - a_yy) eta_xy ],
/// carrying curvature corrections through (d/R)^2 and thermal corrections
/// through (d/lambda_T)^5. eta_zi is the 2-vector that pairs with the
/// (z, x) and (z, y) components of the polarizability.
struct EtaCoefficients {
  double eta_perp = 0.0;
  double eta_zz = 0.0;
  std::array<double, 2> eta_zi{};
  double eta_xy = 0.0;
};

/// Heuristic validity indicators for the expansions (soft bounds; the
/// formulas themselves are polynomials and never fail).
struct ValidityFlags {
  bool tau_within_expansion = true;    // tau <= 0.3
  bool curvature_within_bounds = true;  // |d/R_i| <= 0.5
};

ValidityFlags validity_flags(const LocalGeometry& geom, double tau);

/// The low-temperature curvature-corrected coefficients, transcribed with
/// exact rational constants and the zeta values from MathConstants.
/// Requires a principal-frame geometry and tau >= 0.
EtaCoefficients eta_coefficients(const LocalGeometry& geom, double tau);

/// Retarded particle-surface potential in the dimensionless normalization
/// U * pi d^4 / (hbar c), with the polarizability entries measured in units
/// of d^3 (the scaling by 1/d^3 happens here, so alpha and the geometry just
/// need a common length unit). alpha must be symmetric and expressed in the
/// principal frame of geom.
double u_retarded(const PolarizabilityTensor& alpha, const LocalGeometry& geom,
                  double tau);

/// Classical (high-temperature) free energy in units of k_B T / d^3: the
/// n = 0 Matsubara term with its 1/2 weight, i.e. the zero-frequency limit
/// of the coefficient table contracted with the geometry. Accepts principal
/// or general frames.
double u_classical(const PolarizabilityTensor& alpha,
                   const LocalGeometry& geom);

}  // namespace curvedcp
