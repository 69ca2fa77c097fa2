#include "fueterkit/realization.hpp"

namespace fueterkit {

void Realization::validate() const {
  const int m = spec()->m();
  if (static_cast<int>(A.size()) != m || static_cast<int>(B.size()) != m)
    throw ShapeError("realization needs m state and m input matrices");
  const int n = state_dim(), q = in_dim(), r = out_dim();
  if (C.rows() != r || C.cols() != n) throw ShapeError("output matrix shape mismatch");
  for (const auto& a : A)
    if (a.rows() != n || a.cols() != n) throw ShapeError("state matrix shape mismatch");
  for (const auto& b : B)
    if (b.rows() != n || b.cols() != q) throw ShapeError("input matrix shape mismatch");
}

Realization constant_realization(const FueterPoint& center, const MatrixOverA& value) {
  const auto& spec = center.spec();
  const int m = spec->m();
  Realization r{center,
                std::vector<MatrixOverA>(m, MatrixOverA::zero(spec, 0, 0)),
                std::vector<MatrixOverA>(m, MatrixOverA::zero(spec, 0, value.cols())),
                MatrixOverA::zero(spec, value.rows(), 0), value};
  return r;
}

Realization monomial_realization(const FueterPoint& center, int k, const MatrixOverA& value) {
  const auto& spec = center.spec();
  const int m = spec->m();
  if (k < 1 || k > m) throw ShapeError("variable index out of range");
  const int q = value.cols();
  Realization r{center,
                std::vector<MatrixOverA>(m, MatrixOverA::zero(spec, q, q)),
                std::vector<MatrixOverA>(m, MatrixOverA::zero(spec, q, q)),
                value, MatrixOverA::zero(spec, value.rows(), q)};
  r.B[k - 1] = MatrixOverA::identity(spec, q);
  return r;
}

std::map<MultiIndex, MatrixOverA> sym_matrix_powers(const std::vector<MatrixOverA>& a,
                                                    int degree) {
  if (a.empty()) throw ShapeError("need at least one matrix");
  const auto& spec = a[0].spec();
  const int m = static_cast<int>(a.size());
  const int n = a[0].rows();
  std::map<MultiIndex, MatrixOverA> out;
  out.emplace(mi_zero(m), MatrixOverA::identity(spec, n));
  for (int d = 1; d <= degree; ++d)
    for (const auto& beta : indices_of_degree(m, d)) {
      MatrixOverA acc = MatrixOverA::zero(spec, n, n);
      for (int k = 1; k <= m; ++k) {
        if (beta[k - 1] == 0) continue;
        MultiIndex prev = beta;
        prev[k - 1] -= 1;
        acc += (out.at(prev) * a[k - 1]) * Rational(beta[k - 1]);
      }
      out.emplace(beta, acc * Rational(1, d));
    }
  return out;
}

namespace {

/// I - sum_k (zeta_k - xi_k) A_k as a matrix series.
MatrixSeries resolvent_base(const FueterPoint& center, const std::vector<MatrixOverA>& a,
                            int order) {
  const auto& spec = center.spec();
  const int m = spec->m();
  const int n = a.empty() ? 0 : a[0].rows();
  MatrixSeries e(center, order, n, n);
  e.set_coeff(mi_zero(m), MatrixOverA::identity(spec, n));
  for (int k = 1; k <= m; ++k)
    if (!a[k - 1].is_zero()) e.set_coeff(mi_unit(m, k), -a[k - 1]);
  return e;
}

}  // namespace

MatrixSeries to_series(const Realization& r, int order, ExpandMethod method) {
  r.validate();
  const auto& spec = r.spec();
  const int m = spec->m();
  if (method == ExpandMethod::TaylorFormula) {
    MatrixSeries s(r.center, order, r.out_dim(), r.in_dim());
    s.set_coeff(mi_zero(m), r.D);
    auto powers = sym_matrix_powers(r.A, std::max(order - 1, 0));
    for (int d = 1; d <= order; ++d)
      for (const auto& alpha : indices_of_degree(m, d)) {
        MatrixOverA inner = MatrixOverA::zero(spec, r.state_dim(), r.in_dim());
        for (int k = 1; k <= m; ++k) {
          if (alpha[k - 1] == 0) continue;
          MultiIndex less = alpha;
          less[k - 1] -= 1;
          inner += (powers.at(less) * r.B[k - 1]) * Rational(alpha[k - 1]);
        }
        // r_alpha = ((|alpha|-1)!/alpha!) C (sum_k alpha_k A^{alpha-iota_k} B_k)
        MatrixOverA coeff = (r.C * inner) * Rational(factorial(d - 1), mi_factorial(alpha));
        if (!coeff.is_zero()) s.set_coeff(alpha, coeff);
      }
    return s;
  }
  MatrixSeries resolvent = cauchy_inverse(resolvent_base(r.center, r.A, order));
  MatrixSeries bsum(r.center, order, r.state_dim(), r.in_dim());
  for (int k = 1; k <= m; ++k)
    if (!r.B[k - 1].is_zero()) bsum.set_coeff(mi_unit(m, k), r.B[k - 1]);
  auto s = cauchy_product(cauchy_product(constant_series(r.center, r.C, order), resolvent), bsum);
  return constant_series(r.center, r.D, order) + s;
}

Realization inverse(const Realization& r) {
  r.validate();
  MatrixOverA dinv = mat_invert(r.D);
  Realization out = r;
  MatrixOverA dinv_c = dinv * r.C;
  for (int k = 0; k < r.spec()->m(); ++k) {
    out.A[k] = r.A[k] - r.B[k] * dinv_c;
    out.B[k] = r.B[k] * dinv;
  }
  out.C = -dinv_c;
  out.D = dinv;
  return out;
}

namespace {
void require_composable(const Realization& a, const Realization& b) {
  a.validate();
  b.validate();
  require_same_spec(a.spec(), b.spec());
  if (!(a.center == b.center))
    throw SpecMismatchError("realization centers differ; the product is center dependent");
}
}  // namespace

Realization product(const Realization& r1, const Realization& r2) {
  require_composable(r1, r2);
  if (r1.in_dim() != r2.out_dim()) throw ShapeError("inner dimensions of product differ");
  const auto& spec = r1.spec();
  const int m = spec->m();
  Realization out{r1.center, {}, {}, hstack(r1.C, r1.D * r2.C), r1.D * r2.D};
  for (int k = 0; k < m; ++k) {
    out.A.push_back(block2x2(r1.A[k], r1.B[k] * r2.C,
                             MatrixOverA::zero(spec, r2.state_dim(), r1.state_dim()), r2.A[k]));
    out.B.push_back(vstack(r1.B[k] * r2.D, r2.B[k]));
  }
  return out;
}

Realization sum(const Realization& r1, const Realization& r2) {
  require_composable(r1, r2);
  if (r1.in_dim() != r2.in_dim() || r1.out_dim() != r2.out_dim())
    throw ShapeError("summands must share input and output sizes");
  const auto& spec = r1.spec();
  const int m = spec->m();
  Realization out{r1.center, {}, {}, hstack(r1.C, r2.C), r1.D + r2.D};
  for (int k = 0; k < m; ++k) {
    out.A.push_back(block2x2(r1.A[k], MatrixOverA::zero(spec, r1.state_dim(), r2.state_dim()),
                             MatrixOverA::zero(spec, r2.state_dim(), r1.state_dim()), r2.A[k]));
    out.B.push_back(vstack(r1.B[k], r2.B[k]));
  }
  return out;
}

Realization concat_row(const Realization& r1, const Realization& r2) {
  require_composable(r1, r2);
  if (r1.out_dim() != r2.out_dim()) throw ShapeError("row concat needs equal output sizes");
  const auto& spec = r1.spec();
  const int m = spec->m();
  Realization out{r1.center, {}, {}, hstack(r1.C, r2.C), hstack(r1.D, r2.D)};
  for (int k = 0; k < m; ++k) {
    out.A.push_back(block2x2(r1.A[k], MatrixOverA::zero(spec, r1.state_dim(), r2.state_dim()),
                             MatrixOverA::zero(spec, r2.state_dim(), r1.state_dim()), r2.A[k]));
    out.B.push_back(block2x2(r1.B[k], MatrixOverA::zero(spec, r1.state_dim(), r2.in_dim()),
                             MatrixOverA::zero(spec, r2.state_dim(), r1.in_dim()), r2.B[k]));
  }
  return out;
}

Realization concat_col(const Realization& r1, const Realization& r2) {
  require_composable(r1, r2);
  if (r1.in_dim() != r2.in_dim()) throw ShapeError("column concat needs equal input sizes");
  const auto& spec = r1.spec();
  const int m = spec->m();
  Realization out{r1.center,
                  {},
                  {},
                  block2x2(r1.C, MatrixOverA::zero(spec, r1.out_dim(), r2.state_dim()),
                           MatrixOverA::zero(spec, r2.out_dim(), r1.state_dim()), r2.C),
                  vstack(r1.D, r2.D)};
  for (int k = 0; k < m; ++k) {
    out.A.push_back(block2x2(r1.A[k], MatrixOverA::zero(spec, r1.state_dim(), r2.state_dim()),
                             MatrixOverA::zero(spec, r2.state_dim(), r1.state_dim()), r2.A[k]));
    out.B.push_back(vstack(r1.B[k], r2.B[k]));
  }
  return out;
}

Realization from_polynomial(const MatrixSeries& p) {
  const auto& spec = p.spec();
  const int rows = p.rows();
  Realization acc =
      constant_realization(p.center(), p.coeff_at(mi_zero(spec->m())));
  for (auto& [alpha, value] : p.coeff()) {
    if (mi_total(alpha) == 0) continue;
    std::vector<int> vars;
    for (int k = 1; k <= spec->m(); ++k)
      for (int c = 0; c < alpha[k - 1]; ++c) vars.push_back(k);
    Realization term = monomial_realization(p.center(), vars.back(), value);
    for (size_t i = vars.size() - 1; i-- > 0;)
      term = product(monomial_realization(p.center(), vars[i], MatrixOverA::identity(spec, rows)),
                     term);
    acc = sum(acc, term);
  }
  return acc;
}

MatrixSeries resolvent_span(const FueterPoint& center, const std::vector<MatrixOverA>& a,
                            const MatrixOverA& g0, int order) {
  auto inv = cauchy_inverse(resolvent_base(center, a, order));
  return cauchy_product(constant_series(center, g0, order), inv);
}

std::vector<MatrixSeries> gleason_via_realization(const Realization& r, const MatrixOverA& eta,
                                                  int order) {
  r.validate();
  if (eta.rows() != r.in_dim() || eta.cols() != 1)
    throw ShapeError("eta must be a constant column of input size");
  auto inv = cauchy_inverse(resolvent_base(r.center, r.A, order));
  auto c_inv = cauchy_product(constant_series(r.center, r.C, order), inv);
  std::vector<MatrixSeries> g;
  for (int k = 1; k <= r.spec()->m(); ++k)
    g.push_back(cauchy_product(c_inv, constant_series(r.center, r.B[k - 1] * eta, order)));
  return g;
}

MatrixSeries gleason_residual_matrix(const MatrixSeries& f, const std::vector<MatrixSeries>& g) {
  const int m = f.spec()->m();
  if (static_cast<int>(g.size()) != m)
    throw ShapeError("expected one solution component per variable");
  MatrixSeries res = f;
  res.add_coeff(mi_zero(m), -f.coeff_at(mi_zero(m)));
  for (int k = 1; k <= m; ++k) {
    MatrixSeries var(f.center(), f.order(), g[k - 1].rows(), g[k - 1].rows());
    var.set_coeff(mi_unit(m, k), MatrixOverA::identity(f.spec(), g[k - 1].rows()));
    res -= truncate(cauchy_product(var, truncate(g[k - 1], f.order())), f.order());
  }
  return res;
}

}  // namespace fueterkit
