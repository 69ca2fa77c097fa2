#include "fueterkit/matrix.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace fueterkit {

namespace kernels {
Exec& default_exec() {
  static Exec e = Exec::Parallel;
  return e;
}
}  // namespace kernels

MatrixOverA::MatrixOverA(AlgebraPtr spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * cols, AlgebraElement::zero(spec_));
}

MatrixOverA::MatrixOverA(AlgebraPtr spec, int rows, int cols,
                         std::vector<AlgebraElement> entries)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(rows) * cols)
    throw ShapeError("entry count does not match matrix shape");
  for (auto& x : a_) require_same_spec(spec_, x.spec());
}

MatrixOverA MatrixOverA::identity(const AlgebraPtr& spec, int n) {
  MatrixOverA m(spec, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = AlgebraElement::one(spec);
  return m;
}

MatrixOverA MatrixOverA::zero(const AlgebraPtr& spec, int rows, int cols) {
  return {spec, rows, cols};
}

MatrixOverA MatrixOverA::from_element(const AlgebraElement& a) {
  MatrixOverA m(a.spec(), 1, 1);
  m.at(0, 0) = a;
  return m;
}

const AlgebraElement& MatrixOverA::scalar() const {
  if (rows_ != 1 || cols_ != 1) throw ShapeError("matrix is not 1x1");
  return a_[0];
}

bool MatrixOverA::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

MatrixOverA MatrixOverA::operator-() const {
  MatrixOverA r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

MatrixOverA& MatrixOverA::operator+=(const MatrixOverA& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix addition shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

MatrixOverA& MatrixOverA::operator-=(const MatrixOverA& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix addition shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

MatrixOverA mat_mul(const MatrixOverA& a, const MatrixOverA& b, kernels::Exec how) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  require_same_spec(a.spec(), b.spec());
  MatrixOverA out(a.spec(), a.rows(), b.cols());
  const int r = a.rows(), c = b.cols(), n = a.cols();
  const long total = static_cast<long>(r) * c;
  // fork/join overhead swamps entry work on small shapes
  if (how == kernels::Exec::Parallel && total * n >= 256) {
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < total; ++idx) {
      int i = static_cast<int>(idx / c), j = static_cast<int>(idx % c);
      AlgebraElement acc = AlgebraElement::zero(a.spec());
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  } else {
    for (long idx = 0; idx < total; ++idx) {
      int i = static_cast<int>(idx / c), j = static_cast<int>(idx % c);
      AlgebraElement acc = AlgebraElement::zero(a.spec());
      for (int k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

MatrixOverA operator*(const MatrixOverA& a, const Rational& k) {
  MatrixOverA r = a;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r.at(i, j) = r.at(i, j) * k;
  return r;
}

bool operator==(const MatrixOverA& a, const MatrixOverA& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

MatrixOverA MatrixOverA::left_mul(const AlgebraElement& v) const {
  MatrixOverA r = *this;
  for (auto& x : r.a_) x = v * x;
  return r;
}

MatrixOverA MatrixOverA::right_mul(const AlgebraElement& v) const {
  MatrixOverA r = *this;
  for (auto& x : r.a_) x = x * v;
  return r;
}

MatrixOverA MatrixOverA::dagger() const {
  MatrixOverA r(spec_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).involute();
  return r;
}

std::vector<MatrixOverA> MatrixOverA::columns() const {
  std::vector<MatrixOverA> out;
  for (int j = 0; j < cols_; ++j) {
    MatrixOverA col(spec_, rows_, 1);
    for (int i = 0; i < rows_; ++i) col.at(i, 0) = at(i, j);
    out.push_back(std::move(col));
  }
  return out;
}

namespace {

// Block regular representation: each entry a becomes the field block L(a).
std::vector<std::vector<FieldScalar>> block_rep(const MatrixOverA& m) {
  const int d = m.spec()->dim();
  std::vector<std::vector<FieldScalar>> out(static_cast<size_t>(m.rows()) * d,
                                            std::vector<FieldScalar>(m.cols() * d));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      auto l = m.at(i, j).left_regular();
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out[i * d + r][j * d + c] = l[r][c];
    }
  return out;
}

}  // namespace

double block_norm(const MatrixOverA& a) { return operator_two_norm(block_rep(a)); }

MatrixOverA mat_invert(const MatrixOverA& a) {
  if (a.rows() != a.cols()) throw ShapeError("only square matrices can be inverted");
  const int n = a.rows(), d = a.spec()->dim();
  if (n == 0) return a;
  // Solve the block system [L(a_ij)] X = I over the field; Gaussian
  // elimination over A itself could hit zero-divisor pivots.
  std::vector<std::vector<FieldScalar>> rhs(static_cast<size_t>(n) * d,
                                            std::vector<FieldScalar>(n));
  for (int j = 0; j < n; ++j) rhs[j * d][j] = FieldScalar(Rational(1));
  auto sol = solve_linear(block_rep(a), rhs);
  if (!sol) throw NotInvertibleError("matrix over A is singular in the block representation");
  MatrixOverA x(a.spec(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<FieldScalar> c(d);
      for (int r = 0; r < d; ++r) c[r] = (*sol)[i * d + r][j];
      x.at(i, j) = AlgebraElement(a.spec(), std::move(c));
    }
  MatrixOverA eye = MatrixOverA::identity(a.spec(), n);
  if (!(a * x == eye) || !(x * a == eye))
    throw NotInvertibleError("matrix over A has no two-sided inverse");
  return x;
}

MatrixOverA mat_sqrt_inv(const MatrixOverA& x, SqrtKind kind, double tol) {
  if (x.rows() != x.cols()) throw ShapeError("matrix square root needs a square matrix");
  if (tol <= 0) throw ShapeError("tolerance must be positive");
  const int n = x.rows();
  MatrixOverA y = MatrixOverA::identity(x.spec(), n) - x;
  double ny = block_norm(y);
  if (ny >= 1.0)
    throw DivergentSeriesError("binomial series requires block norm of I - X below 1");
  Rational s = kind == SqrtKind::Sqrt ? Rational(1, 2) : Rational(-1, 2);
  MatrixOverA acc = MatrixOverA::identity(x.spec(), n);
  MatrixOverA term = acc;
  Rational binom = 1;
  const long cap = 100000;
  for (long k = 1; k <= cap; ++k) {
    binom *= (s - (k - 1)) / k;
    term = term * (-y);  // term now holds (-Y)^k
    MatrixOverA contrib = term * binom;
    acc += contrib;
    if (block_norm(contrib) < tol) return acc;
  }
  throw DivergentSeriesError("binomial series did not reach tolerance");
}

MatrixOverA hstack(const MatrixOverA& a, const MatrixOverA& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  MatrixOverA r(a.spec(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

MatrixOverA vstack(const MatrixOverA& a, const MatrixOverA& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
  MatrixOverA r(a.spec(), a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
  }
  return r;
}

MatrixOverA block2x2(const MatrixOverA& a11, const MatrixOverA& a12, const MatrixOverA& a21,
                     const MatrixOverA& a22) {
  return vstack(hstack(a11, a12), hstack(a21, a22));
}

}  // namespace fueterkit
