#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace zm {

/// Arbitrary-precision rational.
using Rational = mpq_class;

/// Complex double, the floating-point scalar backend.
using Complex = std::complex<double>;

enum class NumericMode { exact, floating };

/// Builds a canonical rational from a (possibly uncanonical) num/den pair.
Rational make_rational(long num, long den);

/// Parses "p", "p/q" or a terminating decimal ("0.31") into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& x);

/// Complex number with exact rational real and imaginary parts.
/// Arithmetic is closed: no rounding ever occurs.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// Squared modulus, a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("GaussianRational: division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Textual form "p/q+r/s i" (real part alone when imaginary part is zero).
  std::string str() const;

 private:
  Rational re_, im_;
};

/// Per-backend scalar operations used by the templated operator code.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<GaussianRational> {
  using value_type = GaussianRational;
  static GaussianRational from_int(long n) { return GaussianRational(n); }
  static GaussianRational from_ratio(long num, long den) {
    return GaussianRational(make_rational(num, den));
  }
  static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
  static double abs_approx(const GaussianRational& x) {
    return std::abs(x.to_complex());
  }
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
  static GaussianRational factorial(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return GaussianRational(Rational(f));
  }
  static std::string str(const GaussianRational& x) { return x.str(); }
};

template <>
struct ScalarOps<Complex> {
  using value_type = Complex;
  static Complex from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static Complex from_ratio(long num, long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static bool is_zero(const Complex& x) { return x == Complex{0.0, 0.0}; }
  static double abs_approx(const Complex& x) { return std::abs(x); }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static Complex factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return {f, 0.0};
  }
  static std::string str(const Complex& x);
};

/// base^n for n >= 0 by repeated multiplication; 0^0 = 1.
template <class S>
S pow_int(const S& base, int n) {
  S acc = ScalarOps<S>::from_int(1);
  for (int k = 0; k < n; ++k) acc = acc * base;
  return acc;
}

/// Parses a scalar in exact form ("2", "-1/3", "1+2i", "1/2-3/4i").
/// Decimal literals are converted exactly (0.3 -> 3/10).
GaussianRational parse_gaussian(const std::string& text);

/// Parses a scalar in float form ("0.3", "1+2i", "2.5e-1-1i").
Complex parse_complex(const std::string& text);

std::string complex_str(const Complex& x);

}  // namespace zm
