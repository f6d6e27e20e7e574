#pragma once

#include <array>
#include <vector>

#include "curvedcp/rational.hpp"
#include "curvedcp/specfun.hpp"

namespace curvedcp {

/// Identifies one coefficient function beta^{(p)}_q(xi) of the table:
/// p counts height-profile derivatives (0, 2, 3, 4), q enumerates the terms
/// at that order (p=0: q in {1,2}; p=2: q in {1,2,3}; p=4: q in {1..5}).
/// The single p = 3 coefficient is stored as q = 1.
struct BetaIndex {
  int p = 0;
  int q = 1;

  friend bool operator==(const BetaIndex&, const BetaIndex&) = default;
};

bool beta_index_valid(BetaIndex idx);

/// All eleven valid indices in table order.
const std::array<BetaIndex, 11>& all_beta_indices();

/// One table row: beta(xi) = exp_part(xi) e^{-2 xi} + ei_part(xi) Ei(2 xi),
/// with Ei in the table's convention Ei(x) = -E1(x). Coefficients are exact
/// rationals, stored in ascending powers of xi.
///
/// ei_part has no constant or linear term; its xi^2 onset is what keeps
/// beta finite at xi = 0 despite the logarithm in Ei.
struct BetaPolyPair {
  std::vector<Rational> exp_part;
  std::vector<Rational> ei_part;
};

/// Exact transcription of the table row for idx.
/// Throws std::out_of_range for a (p, q) pair outside the twelve rows.
const BetaPolyPair& beta_poly(BetaIndex idx);

/// Direct evaluation switches to the cancellation-safe asymptotic form at
/// this crossover; the asymptotic form is usable from kBetaAsymptoticMin so
/// the two paths overlap on a band of width 2 around the crossover.
inline constexpr double kBetaAsymptoticCrossover = 20.0;
inline constexpr double kBetaAsymptoticMin = 19.0;
/// Number of terms kept from the asymptotic series of Ei when building the
/// merged large-xi representation.
inline constexpr int kBetaAsymptoticOrder = 30;

/// beta^{(p)}_q(xi) for xi >= 0, relative accuracy 1e-10 or better
/// everywhere. xi = 0 returns the exact constant term; xi above the
/// crossover is routed through beta_eval_asymptotic.
double beta_eval(BetaIndex idx, double xi);

/// Merged large-xi evaluation: the asymptotic series of Ei(2 xi) is folded
/// into the polynomial pair in exact rational arithmetic before anything is
/// rounded, so the leading-power cancellations (four orders of xi for
/// beta^{(4)}_2) cost no precision. Requires xi >= kBetaAsymptoticMin.
double beta_eval_asymptotic(BetaIndex idx, double xi);

/// Rigorous bound: |beta(x)| <= beta_abs_envelope(idx, x) for any
/// x >= kBetaAsymptoticMin. The bound is C(x) e^{-2x} with C a polynomial of
/// degree <= 5 with non-negative coefficients, which is what the Matsubara
/// tail estimate needs.
double beta_abs_envelope(BetaIndex idx, double x);

/// Decay envelope of |beta| suitable for quad_halfline's tail bound
/// (valid for x >= 1).
TailEnvelope beta_quad_envelope(BetaIndex idx);

}  // namespace curvedcp
