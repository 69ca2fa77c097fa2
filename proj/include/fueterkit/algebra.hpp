#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fueterkit/scalar.hpp"

namespace fueterkit {

enum class Field { Real, Complex };
enum class NormPolicy { RegularRep, CoeffL2, CoeffSup };

/// A finite-dimensional associative unital algebra over R or C, given by its
/// structure tensor chi (e_j e_k = sum_l (chi_l)_{jk} e_l), an involution
/// matrix and a norm policy. Instances are immutable after construction and
/// shared read-only.
class AlgebraSpec {
 public:
  AlgebraSpec(Field field, std::vector<std::string> basis,
              std::vector<std::vector<std::vector<FieldScalar>>> chi,
              std::vector<std::vector<FieldScalar>> involution, NormPolicy policy,
              std::string name);

  Field field() const { return field_; }
  int dim() const { return dim_; }
  int m() const { return dim_ - 1; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return basis_; }
  NormPolicy norm_policy() const { return policy_; }

  /// (chi_l)_{jk}
  const FieldScalar& chi(int l, int j, int k) const { return chi_[l][j][k]; }
  const std::vector<std::vector<std::vector<FieldScalar>>>& chi_tensor() const { return chi_; }
  const std::vector<std::vector<FieldScalar>>& involution_matrix() const { return invol_; }

  struct ProdTerm {
    int l;
    FieldScalar c;
    int unit_sign;  // +1 / -1 when c is that real unit, else 0
  };
  /// Nonzero expansion of e_j e_k, precomputed for sparse products.
  const std::vector<ProdTerm>& basis_product(int j, int k) const { return table_[j][k]; }

 private:
  Field field_;
  int dim_;
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<std::vector<std::vector<FieldScalar>>> chi_;
  std::vector<std::vector<FieldScalar>> invol_;
  NormPolicy policy_;
  std::vector<std::vector<std::vector<ProdTerm>>> table_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Element a = sum a_k e_k with exact field-scalar coefficients.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(AlgebraPtr spec, std::vector<FieldScalar> coeff);

  static AlgebraElement zero(const AlgebraPtr& spec);
  static AlgebraElement one(const AlgebraPtr& spec);
  static AlgebraElement basis(const AlgebraPtr& spec, int k);
  static AlgebraElement scalar(const AlgebraPtr& spec, const FieldScalar& k);

  const AlgebraPtr& spec() const { return spec_; }
  const std::vector<FieldScalar>& coeff() const { return c_; }
  const FieldScalar& coeff(int k) const { return c_[k]; }
  bool is_zero() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const FieldScalar& k);
  friend AlgebraElement operator*(const FieldScalar& k, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const Rational& k);
  friend AlgebraElement operator*(const Rational& k, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// dagger: involution matrix plus componentwise field conjugation over C.
  AlgebraElement involute() const;

  /// Left regular representation L(a), row-major (m+1)x(m+1):
  /// L(a) coeff(b) = coeff(ab).
  std::vector<std::vector<FieldScalar>> left_regular() const;

  /// N(a) under the algebra's norm policy.
  double norm() const;

  /// Exact two-sided inverse; throws NotInvertibleError for zero divisors
  /// and non-units.
  AlgebraElement inverse() const;

  std::string str() const;

 private:
  AlgebraPtr spec_;
  std::vector<FieldScalar> c_;
};

void require_same_spec(const AlgebraPtr& a, const AlgebraPtr& b);

/// Builtins: "quaternions", "split_quaternions", "clifford:p,q",
/// "grassmann:n", "ternary" (e^3 = 1), "ternary:-1" (e^3 = -1).
AlgebraPtr builtin_algebra(const std::string& name);
AlgebraPtr clifford_algebra(int p, int q);
AlgebraPtr grassmann_algebra(int n);
AlgebraPtr ternary_algebra(int sign = 1);

struct ValidationReport {
  struct Item {
    std::string check;
    bool pass;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Identity, associativity, anti-automorphism, field-involution axiom, plus
/// sampled N(a^dagger) = N(a) and submultiplicativity checks.
ValidationReport validate_spec(const AlgebraPtr& spec, int samples = 100, uint64_t seed = 1,
                               double tol = 1e-9);

/// Operator 2-norm (largest singular value) of an exact field matrix.
double operator_two_norm(const std::vector<std::vector<FieldScalar>>& mat);

/// Eigenvalues of the Hermitian part (M + M^H)/2, ascending.
std::vector<double> hermitian_part_eigenvalues(const std::vector<std::vector<FieldScalar>>& mat);

/// Exact Gaussian elimination solve A X = B; empty optional when A is
/// singular. A is square row-major, B row-major with matching row count.
std::optional<std::vector<std::vector<FieldScalar>>> solve_linear(
    std::vector<std::vector<FieldScalar>> a, std::vector<std::vector<FieldScalar>> b);

}  // namespace fueterkit
