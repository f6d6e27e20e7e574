#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "curvedcp/errors.hpp"
#include "curvedcp/thermal.hpp"
#include "oracles.hpp"

using namespace curvedcp;

namespace {
double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}
ThermalConfig cfg_at(double tau, double tol = 1e-12) {
  ThermalConfig c;
  c.tau = tau;
  c.sum_rel_tol = tol;
  return c;
}
}  // namespace

TEST_CASE("sum requires positive tau") {
  CHECK_THROWS_AS(matsubara_beta_sum({0, 1}, cfg_at(0.0)), std::domain_error);
  CHECK_THROWS_AS(matsubara_beta_sum({0, 1}, cfg_at(-1.0)), std::domain_error);
}

TEST_CASE("large tau reaches the classical linear asymptote") {
  for (const auto& idx : all_beta_indices()) {
    const auto r = matsubara_beta_sum(idx, cfg_at(50.0));
    CHECK(rel_err(r.value / 50.0, 0.5 * beta_classical(idx)) < 1e-10);
  }
}

TEST_CASE("flat-row sums at tau = 0.1 match the quartic correction") {
  const auto r1 = matsubara_beta_sum({0, 1}, cfg_at(0.1));
  CHECK(std::abs(r1.value - (0.25 - 1e-4 / 180.0)) < 1e-8);
  const auto r2 = matsubara_beta_sum({0, 2}, cfg_at(0.1));
  CHECK(std::abs(r2.value - (0.25 + 1e-4 / 180.0)) < 1e-8);
  // and the machinery agrees with a naive summation loop
  CHECK(rel_err(r1.value, oracles::naive_matsubara_sum({0, 1}, 0.1)) < 1e-12);
  CHECK(rel_err(r2.value, oracles::naive_matsubara_sum({0, 2}, 0.1)) < 1e-12);
}

TEST_CASE("truncation bound honors the advertised invariant") {
  for (double tau : {0.07, 0.4, 2.0, 31.0}) {
    const auto r = matsubara_beta_sum({2, 2}, cfg_at(tau));
    CHECK(r.truncation_bound <= 1e-12 * std::abs(r.value));
    CHECK(r.terms_used >= 1);
  }
}

TEST_CASE("term-count economics") {
  for (const auto& idx : {BetaIndex{0, 1}, BetaIndex{2, 2}, BetaIndex{4, 2},
                          BetaIndex{4, 4}}) {
    for (double tau : {0.05, 0.1, 0.5, 5.0}) {
      const auto r = matsubara_beta_sum(idx, cfg_at(tau));
      CHECK(r.terms_used <= std::lround(std::ceil(40.0 / (2.0 * tau))) + 10);
    }
  }
}

TEST_CASE("max_terms failure carries the partial value") {
  ThermalConfig c = cfg_at(0.001);
  c.max_terms = 10;  // far too few terms for tau = 1e-3
  try {
    matsubara_beta_sum({0, 1}, c);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_estimate() > 0.0);
    CHECK(e.error_bound() > 0.0);
  }
}

TEST_CASE("monotone truncation: a converged result is stable in max_terms") {
  ThermalConfig a = cfg_at(0.3);
  ThermalConfig b = a;
  b.max_terms = 2 * a.max_terms;
  const double va = matsubara_beta_sum({4, 4}, a).value;
  const double vb = matsubara_beta_sum({4, 4}, b).value;
  CHECK(std::abs(va - vb) <= 1e-12 * std::abs(va));
}

TEST_CASE("zero-temperature integrals against the exact closed forms") {
  // frozen list; cross-checked against termwise Gamma integration below
  const std::pair<BetaIndex, Rational> expected[] = {
      {{0, 1}, {1, 4}},    {{0, 2}, {1, 4}},    {{2, 1}, {-3, 20}},
      {{2, 2}, {-2, 15}},  {{2, 3}, {-1, 10}},  {{3, 1}, {1, 15}},
      {{4, 1}, {3, 140}},  {{4, 2}, {-1, 120}}, {{4, 3}, {13, 140}},
      {{4, 4}, {3, 20}},   {{4, 5}, {9, 140}}};
  for (const auto& [idx, exact] : expected) {
    CHECK(oracles::t0_integral_exact(idx) == exact);
    const double quad = beta_T0_integral(idx, 1e-9);
    CHECK(rel_err(quad, exact.to_double()) < 1e-9);
  }
}

TEST_CASE("classical values are the constant terms") {
  CHECK(beta_classical({0, 2}) == 0.25);
  CHECK(beta_classical({2, 3}) == -3.0 / 32);
  CHECK(beta_classical({4, 5}) == 3.0 / 32);
}

TEST_CASE("sum converges to the integral like tau^2 or faster") {
  for (const auto& idx : all_beta_indices()) {
    const double t0 = oracles::t0_integral_exact(idx).to_double();
    const double d1 = std::abs(matsubara_beta_sum(idx, cfg_at(0.05)).value - t0);
    const double d2 =
        std::abs(matsubara_beta_sum(idx, cfg_at(0.025)).value - t0);
    const double d3 =
        std::abs(matsubara_beta_sum(idx, cfg_at(0.0125)).value - t0);
    // analytic leading coefficient |a1 - 2 a0| / 12
    const auto& pr = beta_poly(idx);
    const double a0 = pr.exp_part[0].to_double();
    const double a1 = pr.exp_part.size() > 1 ? pr.exp_part[1].to_double() : 0.0;
    const double c_lead = std::abs(a1 - 2.0 * a0) / 12.0;
    CHECK(d1 <= (c_lead + 0.02) * 0.05 * 0.05 * 1.3);
    // C(tau) = D / tau^2 must not grow as tau shrinks
    CHECK(d2 / (0.025 * 0.025) <= d1 / (0.05 * 0.05) * 1.25 + 1e-12);
    CHECK(d3 / (0.0125 * 0.0125) <= d1 / (0.05 * 0.05) * 1.25 + 1e-12);
  }
}

TEST_CASE("normalized curves: limits and well-posedness") {
  for (const auto& idx : all_beta_indices()) {
    const std::vector<double> grid = {0.01, 1.0};
    const auto curve = normalized_beta_curve(idx, grid, cfg_at(0.0));
    REQUIRE(curve.size() == 2);
    CHECK(std::abs(curve[0].ratio - 1.0) < 1e-3);  // tau -> 0 limit
    if (idx == BetaIndex{0, 1})
      CHECK(std::abs(curve[0].ratio - 1.0) < 1e-4);
    CHECK(std::isfinite(curve[1].beta_tilde));
    CHECK(curve[1].beta_tilde != 0.0);
  }
}

TEST_CASE("normalized curve value matches an independent summation") {
  const std::vector<double> grid = {8.0};
  const auto curve = normalized_beta_curve({0, 1}, grid, cfg_at(0.0));
  const double oracle = oracles::naive_matsubara_sum({0, 1}, 8.0) /
                        oracles::t0_integral_exact({0, 1}).to_double();
  CHECK(rel_err(curve[0].ratio, oracle) < 1e-9);
  // the classical line tau/4 is approached from above at large tau
  CHECK(curve[0].ratio > 2.0);
  CHECK(std::abs(curve[0].ratio - 2.0) < 1e-3);
}

TEST_CASE("normalized curve grid validation") {
  const std::vector<double> bad1 = {0.0, 1.0};
  CHECK_THROWS_AS(normalized_beta_curve({0, 1}, bad1, cfg_at(0.0)),
                  std::domain_error);
  const std::vector<double> bad2 = {1.0, 0.5};
  CHECK_THROWS_AS(normalized_beta_curve({0, 1}, bad2, cfg_at(0.0)),
                  std::domain_error);
}

TEST_CASE("concurrent summation is deterministic") {
  const double sequential = matsubara_beta_sum({4, 2}, cfg_at(0.3)).value;
  std::vector<double> results(8, 0.0);
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&results, t] {
      results[t] = matsubara_beta_sum({4, 2}, cfg_at(0.3)).value;
    });
  for (auto& w : workers) w.join();
  for (double r : results) CHECK(r == sequential);
}
