#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace fueterkit {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvertibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivergentSeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpecMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", an integer, a decimal ("0.25"), or scientific notation
/// ("1e-3") into an exact rational.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string rational_str(const Rational& q);

BigInt factorial(long n);

/// Scalar of the base field: exact rational real and imaginary parts.
/// Over the real field the imaginary part is identically zero.
struct FieldScalar {
  Rational re{0};
  Rational im{0};

  FieldScalar() = default;
  FieldScalar(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(long n) : re(n) {}                 // NOLINT(google-explicit-constructor)
  FieldScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  FieldScalar conj() const { return {re, -im}; }
  Rational modulus_sq() const { return re * re + im * im; }
  double modulus() const;
  std::complex<double> to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  FieldScalar operator-() const { return {-re, -im}; }
  FieldScalar& operator+=(const FieldScalar& o) {
    if (!o.re.is_zero()) re += o.re;
    if (!o.im.is_zero()) im += o.im;
    return *this;
  }
  FieldScalar& operator-=(const FieldScalar& o) {
    if (!o.re.is_zero()) re -= o.re;
    if (!o.im.is_zero()) im -= o.im;
    return *this;
  }
  FieldScalar& operator*=(const FieldScalar& o) {
    // real operands are the common case; skip the complex cross terms
    if (im.is_zero()) {
      if (o.im.is_zero()) {
        re *= o.re;
      } else {
        im = re * o.im;
        re *= o.re;
      }
      return *this;
    }
    if (o.im.is_zero()) {
      re *= o.re;
      im *= o.re;
      return *this;
    }
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// Exact reciprocal; throws NotInvertibleError on zero.
  FieldScalar inverse() const;
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    return a * b.inverse();
  }

  std::string str() const;
};

/// Parses "p/q" or "p/q+r/si" style literals.
FieldScalar parse_field_scalar(const std::string& text);

}  // namespace fueterkit
