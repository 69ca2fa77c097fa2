#pragma once

#include <map>
#include <span>
#include <vector>

#include "fueterkit/algebra.hpp"

namespace fueterkit {

/// Polynomial in the commuting scalar variables v_0..v_m with algebra
/// coefficients written to the right of the monomials. Exact carrier for
/// applying the Cauchy-Fueter operator.
class VPolynomial {
 public:
  /// Exponent vectors over v_0..v_m (length m+1).
  using Exponent = std::vector<int>;

  VPolynomial() = default;
  explicit VPolynomial(AlgebraPtr spec) : spec_(std::move(spec)) {}

  static VPolynomial zero(const AlgebraPtr& spec) { return VPolynomial(spec); }
  static VPolynomial constant(const AlgebraElement& a);
  /// The monomial v_j (0-based over v_0..v_m).
  static VPolynomial variable(const AlgebraPtr& spec, int j);

  const AlgebraPtr& spec() const { return spec_; }
  const std::map<Exponent, AlgebraElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Exponent& e, const AlgebraElement& c);

  VPolynomial operator-() const;
  VPolynomial& operator+=(const VPolynomial& o);
  VPolynomial& operator-=(const VPolynomial& o);
  friend VPolynomial operator+(VPolynomial a, const VPolynomial& b) { return a += b; }
  friend VPolynomial operator-(VPolynomial a, const VPolynomial& b) { return a -= b; }
  friend VPolynomial operator*(const VPolynomial& a, const VPolynomial& b);
  friend VPolynomial operator*(const VPolynomial& a, const Rational& k);
  friend VPolynomial operator*(const Rational& k, const VPolynomial& a) { return a * k; }
  friend bool operator==(const VPolynomial& a, const VPolynomial& b);

  /// Coefficients are multiplied by c on the chosen side; monomials commute.
  VPolynomial left_mul(const AlgebraElement& c) const;
  VPolynomial right_mul(const AlgebraElement& c) const;

  VPolynomial derivative(int j) const;
  AlgebraElement eval(std::span<const FieldScalar> v) const;

  std::string str() const;

 private:
  AlgebraPtr spec_;
  std::map<Exponent, AlgebraElement> terms_;
};

/// Cauchy-Fueter operator D = D_0 + sum_k e_k D_k; the e_k factor multiplies
/// each differentiated coefficient from the left.
VPolynomial apply_dirac(const VPolynomial& p);

}  // namespace fueterkit
