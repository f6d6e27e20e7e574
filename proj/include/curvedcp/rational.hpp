#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace curvedcp {

/// Exact rational number backed by 128-bit integers.
///
/// Used for the coefficient tables: storing them as integer ratios removes
/// transcription rounding and lets the zero-frequency audits compare exactly.
/// Arithmetic normalizes after every operation; overflow of the 128-bit
/// representation throws instead of wrapping.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational from_raw(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  long long num() const {
    check_ll(num_);
    return static_cast<long long>(num_);
  }
  long long den() const {
    check_ll(den_);
    return static_cast<long long>(den_);
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Int g = gcd128(a.den_, b.den_);
    Int lhs = mul_checked(a.num_, b.den_ / g);
    Int rhs = mul_checked(b.num_, a.den_ / g);
    return from_raw(add_checked(lhs, rhs), mul_checked(a.den_, b.den_ / g));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational::from_raw(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = gcd128(abs128(a.num_), b.den_);
    Int g2 = gcd128(abs128(b.num_), a.den_);
    return from_raw(mul_checked(a.num_ / g1, b.num_ / g2),
                    mul_checked(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational::from_raw(b.den_, b.num_);
  }
  Rational operator-() const { return from_raw(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

 private:
  Int num_;
  Int den_;

  static Int abs128(Int v) { return v < 0 ? -v : v; }

  static Int gcd128(Int a, Int b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static Int add_checked(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("Rational: 128-bit overflow in addition");
    return r;
  }

  static Int mul_checked(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("Rational: 128-bit overflow in multiplication");
    return r;
  }

  static void check_ll(Int v) {
    if (v > static_cast<Int>(INT64_MAX) || v < static_cast<Int>(INT64_MIN))
      throw std::overflow_error("Rational: value does not fit in long long");
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd128(abs128(num_), den_);
    num_ /= g;
    den_ /= g;
  }
};

}  // namespace curvedcp
