#pragma once

#include <vector>

#include "fueterkit/algebra.hpp"

namespace fueterkit {

namespace kernels {
enum class Exec { Serial, Parallel };
/// Process-wide default used by the parallel kernels; tests flip it to
/// compare both code paths.
Exec& default_exec();
}  // namespace kernels

/// Dense rectangular matrix with entries in the algebra. Entries multiply
/// with the (noncommutative) algebra product, order preserved.
class MatrixOverA {
 public:
  MatrixOverA() = default;
  MatrixOverA(AlgebraPtr spec, int rows, int cols);
  MatrixOverA(AlgebraPtr spec, int rows, int cols, std::vector<AlgebraElement> entries);

  static MatrixOverA identity(const AlgebraPtr& spec, int n);
  static MatrixOverA zero(const AlgebraPtr& spec, int rows, int cols);
  static MatrixOverA from_element(const AlgebraElement& a);  // 1x1

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const AlgebraPtr& spec() const { return spec_; }
  AlgebraElement& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const AlgebraElement& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }
  const AlgebraElement& scalar() const;  // entry of a 1x1 matrix
  bool is_zero() const;

  MatrixOverA operator-() const;
  MatrixOverA& operator+=(const MatrixOverA& o);
  MatrixOverA& operator-=(const MatrixOverA& o);
  friend MatrixOverA operator+(MatrixOverA a, const MatrixOverA& b) { return a += b; }
  friend MatrixOverA operator-(MatrixOverA a, const MatrixOverA& b) { return a -= b; }
  friend MatrixOverA operator*(const MatrixOverA& a, const MatrixOverA& b);
  friend MatrixOverA operator*(const MatrixOverA& a, const Rational& k);
  friend MatrixOverA operator*(const Rational& k, const MatrixOverA& a) { return a * k; }
  friend bool operator==(const MatrixOverA& a, const MatrixOverA& b);

  /// Entrywise left/right multiplication by an algebra element.
  MatrixOverA left_mul(const AlgebraElement& a) const;
  MatrixOverA right_mul(const AlgebraElement& a) const;

  /// Conjugate transpose with respect to the involution.
  MatrixOverA dagger() const;

  std::vector<MatrixOverA> columns() const;

 private:
  AlgebraPtr spec_;
  int rows_ = 0, cols_ = 0;
  std::vector<AlgebraElement> a_;
};

MatrixOverA mat_mul(const MatrixOverA& a, const MatrixOverA& b, kernels::Exec how);
inline MatrixOverA operator*(const MatrixOverA& a, const MatrixOverA& b) {
  return mat_mul(a, b, kernels::default_exec());
}

/// Exact inverse via the block regular representation (entrywise L(a)
/// blocks); verified two-sided. Throws NotInvertibleError.
MatrixOverA mat_invert(const MatrixOverA& a);

/// Operator 2-norm of the block regular representation, in floats.
double block_norm(const MatrixOverA& a);

enum class SqrtKind { Sqrt, InvSqrt };

/// Binomial series for X^(1/2) or X^(-1/2) with X = I - Y, truncated when
/// the float block norm of the term drops below tol. Requires
/// block_norm(Y) < 1; throws DivergentSeriesError otherwise.
MatrixOverA mat_sqrt_inv(const MatrixOverA& x, SqrtKind kind, double tol);

/// Block stacking helpers.
MatrixOverA hstack(const MatrixOverA& a, const MatrixOverA& b);
MatrixOverA vstack(const MatrixOverA& a, const MatrixOverA& b);
MatrixOverA block2x2(const MatrixOverA& a11, const MatrixOverA& a12, const MatrixOverA& a21,
                     const MatrixOverA& a22);

}  // namespace fueterkit
