#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "curvedcp/specfun.hpp"
#include "oracles.hpp"

using namespace curvedcp;

namespace {
double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}
}  // namespace

TEST_CASE("zeta and gamma constants") {
  CHECK(rel_err(MathConstants::zeta3, 1.2020569031595942854) < 1e-15);
  CHECK(rel_err(MathConstants::zeta5, 1.0369277551433699263) < 1e-15);
  CHECK(rel_err(MathConstants::euler_gamma, 0.5772156649015328606) < 1e-15);
}

TEST_CASE("E1 at the pinned reference points") {
  // frozen from the series oracle
  CHECK(rel_err(exp_integral_e1(1.0), 0.21938393439552028) < 1e-13);
  CHECK(rel_err(exp_integral_e1(2.0), 0.04890051070806112) < 1e-13);
}

TEST_CASE("E1 large-argument behaviour: x e^x E1(x) -> 1") {
  for (double x : {50.0, 300.0, 700.0}) {
    const double v = x * std::exp(x) * exp_integral_e1(x);
    CHECK(std::abs(v - 1.0) < 1.1 / x);
  }
}

TEST_CASE("E1 against the 100-digit dual-method oracle") {
  // 20 log-spaced points in [1e-6, 50]
  for (int i = 0; i < 20; ++i) {
    const double x = 1e-6 * std::pow(5e7, i / 19.0);
    const double ref = static_cast<double>(oracles::e1_hp(oracles::Hp(x)));
    CHECK(rel_err(exp_integral_e1(x), ref) < 1e-13);
  }
}

TEST_CASE("E1 domain errors") {
  CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_e1(-1.0), std::domain_error);
  CHECK_THROWS_AS(minus_e1(0.0), std::domain_error);
}

TEST_CASE("paper Ei is exactly -E1") {
  for (double x : {1e-6, 0.3, 1.0, 1.5, 2.0, 10.0, 40.0})
    CHECK(minus_e1(x) + exp_integral_e1(x) == 0.0);
}

TEST_CASE("paper Ei small-x expansion") {
  const double x = 1e-6;
  const double expansion = MathConstants::euler_gamma + std::log(x) - x;
  CHECK(std::abs(minus_e1(x) - expansion) < 1e-12);
}

TEST_CASE("E1 derivative identity by central differences") {
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double h = 1e-5 * x;
    const double fd =
        (exp_integral_e1(x + h) - exp_integral_e1(x - h)) / (2.0 * h);
    const double exact = -std::exp(-x) / x;
    CHECK(rel_err(fd, exact) < 1e-6);
  }
}

TEST_CASE("E1 monotone decreasing and positive") {
  double prev = exp_integral_e1(1e-4);
  for (double x = 0.01; x < 30.0; x += 0.37) {
    const double v = exp_integral_e1(x);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("quad_halfline on elementary integrands") {
  const double a = quad_halfline([](double x) { return std::exp(-2.0 * x); },
                                 1e-11, {1.0, 0, 1.0});
  CHECK(rel_err(a, 0.5) < 1e-11);

  const double b = quad_halfline(
      [](double x) { return x * x * std::exp(-2.0 * x); }, 1e-11,
      {1.0, 2, 1.0});
  CHECK(rel_err(b, 0.25) < 1e-11);
}

TEST_CASE("quad_halfline on the first table row") {
  const BetaIndex idx{0, 1};
  const double v = quad_halfline([&](double x) { return beta_eval(idx, x); },
                                 1e-11, beta_quad_envelope(idx));
  CHECK(rel_err(v, 0.25) < 1e-11);
}

TEST_CASE("quad_halfline linearity on polynomial-exponential integrands") {
  // against Gamma(n+1)/2^{n+1} closed forms
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  const double rel_tol = 1e-10;
  auto closed = [](int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f / std::pow(2.0, n + 1);
  };
  for (int trial = 0; trial < 10; ++trial) {
    const double c0 = coeff(rng), c3 = coeff(rng), c5 = coeff(rng);
    auto f = [&](double x) {
      return (c0 + c3 * x * x * x + c5 * std::pow(x, 5)) * std::exp(-2.0 * x);
    };
    const double expect = c0 * closed(0) + c3 * closed(3) + c5 * closed(5);
    const double got = quad_halfline(f, rel_tol, {10.0, 5, 1.0});
    CHECK(std::abs(got - expect) <= 10.0 * rel_tol * std::abs(expect) + 1e-14);
  }
}

TEST_CASE("quad_halfline tolerance domain") {
  auto f = [](double x) { return std::exp(-2.0 * x); };
  CHECK_THROWS_AS(quad_halfline(f, 1e-15, {1.0, 0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(quad_halfline(f, 1e-2, {1.0, 0, 1.0}), std::domain_error);
}

TEST_CASE("tail bound matches the closed form it implements") {
  for (int k : {0, 2, 6}) {
    for (double cut : {10.0, 20.0}) {
      double fact = 1.0;
      for (int j = 1; j <= k; ++j) fact *= j;
      double sum = 0.0, term = 1.0;
      for (int j = 0; j <= k; ++j) {
        if (j > 0) term *= 2.0 * cut / j;
        sum += term;
      }
      const double exact =
          fact / std::pow(2.0, k + 1) * std::exp(-2.0 * cut) * sum;
      const double bound = tail_integral_bound({1.0, k, 1.0}, cut);
      CHECK(rel_err(bound, exact) < 1e-12);
    }
  }
}
