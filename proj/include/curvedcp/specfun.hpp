#pragma once

#include <functional>

#include "curvedcp/errors.hpp"

namespace curvedcp {

/// Mathematical constants used by the thermal expansions. The zeta values
/// enter the low-temperature corrections; they are fixed literals rather
/// than computed quantities.
struct MathConstants {
  static constexpr double zeta3 = 1.20205690315959428540;
  static constexpr double zeta5 = 1.03692775514336992633;
  static constexpr double euler_gamma = 0.57721566490153286061;
};

/// Exponential integral E1(x) = \int_x^\infty e^{-t}/t dt for x > 0.
///
/// Power series below x = 1.5, modified-Lentz continued fraction above;
/// both deliver better than 1e-13 relative accuracy on their side of the
/// boundary. Throws std::domain_error for x <= 0.
double exp_integral_e1(double x);

/// The sign convention used by the coefficient table:
///   Ei(x) = -\int_x^\infty dt e^{-t}/t = -E1(x),  x > 0.
double minus_e1(double x);

/// Decay envelope for half-line integrands: |f(x)| <= coeff * x^degree * e^{-2x}
/// for x >= valid_from. Callers supply it so the truncation of the infinite
/// tail is a rigorous bound, not a guess.
struct TailEnvelope {
  double coeff = 1.0;
  int degree = 0;
  double valid_from = 1.0;
};

/// Upper bound on \int_X^\infty coeff * t^degree * e^{-2t} dt (exact
/// incomplete-gamma formula, evaluated in closed form).
double tail_integral_bound(const TailEnvelope& env, double x);

/// Adaptive quadrature of f over [0, infinity).
///
/// Gauss-Kronrod 7/15 panels on [0, X] with X pushed outward until the
/// analytic tail bound from `env` drops below the requested tolerance.
/// rel_tol must lie in (1e-14, 1e-3). Throws ConvergenceError (carrying the
/// best estimate and its error bound) if panel subdivision is exhausted.
double quad_halfline(const std::function<double(double)>& f, double rel_tol,
                     const TailEnvelope& env);

}  // namespace curvedcp
