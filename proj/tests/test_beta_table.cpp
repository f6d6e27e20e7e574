#include <doctest.h>

#include <cmath>
#include <limits>

#include "curvedcp/beta_table.hpp"
#include "curvedcp/rational.hpp"
#include "oracles.hpp"

using namespace curvedcp;

namespace {
double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}
}  // namespace

TEST_CASE("table rows carry the transcribed rational coefficients") {
  const auto& r01 = beta_poly({0, 1});
  CHECK(r01.exp_part == std::vector<Rational>{{1, 8}, {1, 4}, {1, 2}});
  CHECK(r01.ei_part.empty());

  const auto& r22 = beta_poly({2, 2});
  CHECK(r22.exp_part ==
        std::vector<Rational>{{-1, 16}, {-1, 8}, {1, 8}, {-1, 4}});
  CHECK(r22.ei_part ==
        std::vector<Rational>{{0}, {0}, {1}, {0}, {-1, 2}});

  const auto& r42 = beta_poly({4, 2});
  CHECK(r42.exp_part ==
        std::vector<Rational>{{-1, 64}, {-271, 480}, {-259, 960},
                              {91, 160}, {7, 480}, {-7, 240}});
  CHECK(r42.ei_part ==
        std::vector<Rational>{{0}, {0}, {-2}, {0}, {7, 6}, {0}, {-7, 120}});
}

TEST_CASE("ei columns start at xi^2") {
  for (const auto& idx : all_beta_indices()) {
    const auto& pr = beta_poly(idx);
    if (pr.ei_part.empty()) continue;
    CHECK(pr.ei_part[0].is_zero());
    CHECK(pr.ei_part[1].is_zero());
    CHECK(pr.exp_part.size() <= 6);
    CHECK(pr.ei_part.size() <= 7);
  }
}

TEST_CASE("invalid indices are rejected") {
  for (BetaIndex bad : {BetaIndex{1, 1}, BetaIndex{0, 3}, BetaIndex{2, 4},
                        BetaIndex{3, 2}, BetaIndex{4, 6}, BetaIndex{5, 1},
                        BetaIndex{0, 0}, BetaIndex{-2, 1}}) {
    CHECK(!beta_index_valid(bad));
    CHECK_THROWS_AS(beta_poly(bad), std::out_of_range);
    CHECK_THROWS_AS(beta_eval(bad, 1.0), std::out_of_range);
  }
}

TEST_CASE("exact values at xi = 0") {
  auto at0 = [](int p, int q) { return beta_eval({p, q}, 0.0); };
  CHECK(at0(0, 1) == 1.0 / 8);
  CHECK(at0(0, 2) == 1.0 / 4);
  CHECK(at0(2, 1) == -3.0 / 32);
  CHECK(at0(2, 2) == -1.0 / 16);
  CHECK(at0(2, 3) == -3.0 / 32);
  CHECK(at0(3, 1) == 1.0 / 32);
  CHECK(at0(4, 1) == 1.0 / 128);
  CHECK(at0(4, 2) == -1.0 / 64);
  CHECK(at0(4, 3) == 5.0 / 64);
  CHECK(at0(4, 4) == 3.0 / 32);
  CHECK(at0(4, 5) == 3.0 / 32);
}

TEST_CASE("zero-frequency audit in exact rational arithmetic") {
  auto c0 = [](int p, int q) { return beta_poly({p, q}).exp_part.front(); };
  CHECK(c0(4, 4) == Rational(3, 32));
  // combinations that assemble the classical quadratic coefficients
  const Rational b41 = c0(4, 1), b43 = c0(4, 3), b45 = c0(4, 5);
  CHECK(b41 + b43 + b45 / Rational(2) == Rational(17, 128));
  CHECK(b41 + b43 - b45 / Rational(2) == Rational(5, 128));
  CHECK(b41 * Rational(2) == Rational(2, 128));
  const Rational b42 = c0(4, 2), b44 = c0(4, 4);
  CHECK(b42 + b44 == Rational(5, 64));
  CHECK(b42 * Rational(2) == Rational(-2, 64));
}

TEST_CASE("beta_eval rejects negative xi") {
  CHECK_THROWS_AS(beta_eval({0, 1}, -0.5), std::domain_error);
}

TEST_CASE("pure-exponential row at large xi") {
  // (1/8)(1 + 60 + 3600) e^{-60}
  const double expect = 0.125 * 3661.0 * std::exp(-60.0);
  CHECK(rel_err(beta_eval({0, 1}, 30.0), expect) < 1e-12);
  CHECK(expect == doctest::Approx(4.0e-24).epsilon(0.01));
}

TEST_CASE("asymptotic path equals direct path when ei column is empty") {
  for (double xi : {19.0, 20.0, 25.0, 40.0, 120.0}) {
    const auto& pr = beta_poly({0, 1});
    double horner = 0.0;
    for (auto it = pr.exp_part.rbegin(); it != pr.exp_part.rend(); ++it)
      horner = horner * xi + it->to_double();
    CHECK(beta_eval_asymptotic({0, 1}, xi) == horner * std::exp(-2.0 * xi));
  }
}

TEST_CASE("asymptotic path rejects small xi") {
  CHECK_THROWS_AS(beta_eval_asymptotic({4, 2}, 18.9), std::domain_error);
  CHECK_NOTHROW(beta_eval_asymptotic({4, 2}, 19.0));
}

TEST_CASE("direct and asymptotic paths agree across the crossover band") {
  const auto& pr_all = all_beta_indices();
  for (const auto& idx : pr_all) {
    const auto& pr = beta_poly(idx);
    for (double xi : {19.0, 19.5, 20.0, 20.5, 21.0}) {
      // direct evaluation, bypassing the crossover switch
      double pa = 0.0;
      for (auto it = pr.exp_part.rbegin(); it != pr.exp_part.rend(); ++it)
        pa = pa * xi + it->to_double();
      double direct = pa * std::exp(-2.0 * xi);
      if (!pr.ei_part.empty()) {
        double pb = 0.0;
        for (auto it = pr.ei_part.rbegin(); it != pr.ei_part.rend(); ++it)
          pb = pb * xi + it->to_double();
        direct += pb * minus_e1(2.0 * xi);
      }
      CHECK(rel_err(direct, beta_eval_asymptotic(idx, xi)) < 1e-9);
    }
  }
}

TEST_CASE("cancellation-safe values against the 100-digit oracle") {
  for (const auto& idx : all_beta_indices()) {
    if (beta_poly(idx).ei_part.empty()) continue;
    for (double xi : {15.0, 20.0, 25.0, 30.0}) {
      const double ref =
          static_cast<double>(oracles::beta_hp(idx, oracles::Hp(xi)));
      CHECK(rel_err(beta_eval(idx, xi), ref) < 1e-10);
    }
  }
}

TEST_CASE("the direct route loses digits where the merged route does not") {
  // at xi = 25 the two contributions to beta(4,2) are ~1e4 times the result
  const BetaIndex idx{4, 2};
  const double xi = 25.0;
  const auto& pr = beta_poly(idx);
  double pa = 0.0;
  for (auto it = pr.exp_part.rbegin(); it != pr.exp_part.rend(); ++it)
    pa = pa * xi + it->to_double();
  const double term_exp = std::abs(pa * std::exp(-2.0 * xi));
  const double value = std::abs(beta_eval(idx, xi));
  CHECK(term_exp / value > 1e3);  // >= 3 digits of cancellation
}

TEST_CASE("xi -> 0 limit reaches the constant term") {
  for (const auto& idx : all_beta_indices()) {
    const double limit = beta_eval(idx, 1e-8);
    CHECK(std::abs(limit - beta_eval(idx, 0.0)) < 1e-6);
  }
}

TEST_CASE("uniform exponential decay") {
  for (const auto& idx : all_beta_indices()) {
    // |beta| <= C xi^5 e^{-2 xi} on xi >= 5 with a modest constant
    double c_fit = 0.0;
    for (double xi = 5.0; xi <= 40.0; xi += 0.5) {
      const double env = std::pow(xi, 5) * std::exp(-2.0 * xi);
      c_fit = std::max(c_fit, std::abs(beta_eval(idx, xi)) / env);
    }
    CHECK(c_fit < 1.0);
    const double ratio =
        std::abs(beta_eval(idx, 40.0)) / std::abs(beta_eval(idx, 5.0));
    CHECK(ratio < 1e-25);
  }
}

TEST_CASE("envelope really bounds the function") {
  for (const auto& idx : all_beta_indices())
    for (double x : {19.0, 22.0, 30.0, 50.0})
      CHECK(std::abs(beta_eval(idx, x)) <= beta_abs_envelope(idx, x));
}

TEST_CASE("rational arithmetic underpinning the tables") {
  CHECK(Rational(-15, 960) == Rational(-1, 64));      // normalization
  CHECK(Rational(3, -6) == Rational(-1, 2));          // sign moves up
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(7, 480) * Rational(480, 7) == Rational(1));
  CHECK((Rational(1, 8) / Rational(1, 2)) == Rational(1, 4));
  CHECK((-Rational(3, 32)).to_double() == -0.09375);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::domain_error);
}
