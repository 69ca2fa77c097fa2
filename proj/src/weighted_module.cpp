#include "fueterkit/weighted_module.hpp"

#include <cmath>

namespace fueterkit {

void require_module_element(const FueterSeries& f) {
  if (!f.center().is_origin())
    throw SpecMismatchError("module elements are series centered at the origin");
  if (f.side() != Side::Left) throw ShapeError("module elements are left series");
}

AlgebraElement hermitian_form(const FueterSeries& f, const FueterSeries& g,
                              const WeightFamily& w) {
  require_module_element(f);
  require_module_element(g);
  require_same_spec(f.spec(), g.spec());
  AlgebraElement acc = AlgebraElement::zero(f.spec());
  for (auto& [alpha, fa] : f.coeff()) {
    auto it = g.coeff().find(alpha);
    if (it == g.coeff().end()) continue;
    acc += FieldScalar(w.c(alpha)) * (it->second.involute() * fa);
  }
  return acc;
}

double module_norm(const FueterSeries& f, const WeightFamily& w) {
  require_module_element(f);
  double acc = 0;
  for (auto& [alpha, fa] : f.coeff()) {
    double n = fa.norm();
    acc += std::abs(w.c(alpha).convert_to<double>()) * n * n;
  }
  return std::sqrt(acc);
}

FieldScalar component_form(const FueterSeries& f, const FueterSeries& g, const WeightFamily& w,
                           int l) {
  require_module_element(f);
  require_module_element(g);
  const auto& spec = f.spec();
  if (l < 0 || l >= spec->dim()) throw ShapeError("component index out of range");
  FieldScalar acc;
  for (auto& [alpha, fa] : f.coeff()) {
    auto it = g.coeff().find(alpha);
    if (it == g.coeff().end()) continue;
    AlgebraElement gd = it->second.involute();
    FieldScalar pair;
    for (int j = 0; j < spec->dim(); ++j) {
      if (gd.coeff(j).is_zero()) continue;
      for (int k = 0; k < spec->dim(); ++k) {
        if (fa.coeff(k).is_zero() || spec->chi(l, j, k).is_zero()) continue;
        pair += gd.coeff(j) * spec->chi(l, j, k) * fa.coeff(k);
      }
    }
    acc += FieldScalar(w.c(alpha)) * pair;
  }
  return acc;
}

FueterSeries kernel_series(const std::vector<AlgebraElement>& xi, int order,
                           const WeightFamily& w, const AlgebraElement& b) {
  if (xi.empty()) throw ShapeError("empty zeta tuple");
  const AlgebraPtr& spec = xi[0].spec();
  require_same_spec(spec, b.spec());
  if (static_cast<int>(xi.size()) != spec->m()) throw ShapeError("zeta tuple needs m entries");
  auto mono = sym_monomial_values(xi, order);
  FueterSeries k(FueterPoint::origin(spec), order);
  for (auto& [alpha, value] : mono) {
    AlgebraElement coeff = value.involute() * b * Rational(1 / w.c(alpha));
    if (!coeff.is_zero()) k.set_coeff(alpha, coeff);
  }
  return k;
}

FueterSeries kernel_series(const FueterPoint& xi, int order, const WeightFamily& w,
                           const AlgebraElement& b) {
  return kernel_series(xi.zetas(), order, w, b);
}

std::pair<AlgebraElement, AlgebraElement> reproducing_check(const FueterSeries& f,
                                                            const std::vector<AlgebraElement>& xi,
                                                            const AlgebraElement& b,
                                                            const WeightFamily& w,
                                                            int kernel_order) {
  require_module_element(f);
  if (kernel_order < f.degree())
    throw TruncationError("kernel truncation order is below the polynomial degree");
  FueterSeries k = kernel_series(xi, kernel_order, w, b);
  AlgebraElement lhs = hermitian_form(f, k, w);
  AlgebraElement rhs = b.involute() * eval(f, xi);
  return {lhs, rhs};
}

std::pair<AlgebraElement, AlgebraElement> reproducing_check(const FueterSeries& f,
                                                            const FueterPoint& xi,
                                                            const AlgebraElement& b,
                                                            const WeightFamily& w,
                                                            int kernel_order) {
  return reproducing_check(f, xi.zetas(), b, w, kernel_order);
}

FueterSeries mult_op(int k, const FueterSeries& f) {
  require_module_element(f);
  const int m = f.spec()->m();
  if (k < 1 || k > m) throw ShapeError("variable index out of range");
  FueterSeries out(f.center(), f.order() + 1);
  for (auto& [alpha, v] : f.coeff()) out.set_coeff(mi_add(alpha, mi_unit(m, k)), v);
  return out;
}

FueterSeries mult_by(const FueterSeries& s, const FueterSeries& f) {
  require_module_element(s);
  require_module_element(f);
  return cauchy_product(truncate(s, s.degree() + f.degree()),
                        truncate(f, s.degree() + f.degree()));
}

FueterSeries derivative_op(int k, const FueterSeries& f) {
  require_module_element(f);
  const int m = f.spec()->m();
  if (k < 1 || k > m) throw ShapeError("variable index out of range");
  FueterSeries out(f.center(), std::max(f.order() - 1, 0));
  for (auto& [alpha, v] : f.coeff()) {
    if (alpha[k - 1] == 0) continue;
    MultiIndex beta = alpha;
    beta[k - 1] -= 1;
    out.set_coeff(beta, v * Rational(alpha[k - 1]));
  }
  return out;
}

std::pair<AlgebraElement, AlgebraElement> da_adjoint_check(int k, const FueterSeries& f,
                                                           const FueterSeries& g) {
  WeightFamily w = WeightFamily::drury_arveson();
  return {hermitian_form(backward_shift(f, k), g, w), hermitian_form(f, mult_op(k, g), w)};
}

ContractionGap da_contraction_gap(const FueterSeries& f, int k) {
  WeightFamily w = WeightFamily::drury_arveson();
  ContractionGap out;
  FueterSeries mf = mult_op(k, f);
  out.gap = hermitian_form(f, f, w) - hermitian_form(mf, mf, w);
  out.witness_sum = AlgebraElement::zero(f.spec());
  for (auto& [alpha, fa] : f.coeff()) {
    Rational d2 = w.c(alpha) * Rational(mi_total(alpha) - alpha[k - 1], mi_total(alpha) + 1);
    out.witness.emplace_back(d2, fa);
    out.witness_sum += FieldScalar(d2) * (fa.involute() * fa);
  }
  out.exact = out.gap == out.witness_sum;
  return out;
}

EvaluationIdentity evaluation_identity_check(const FueterSeries& f) {
  require_module_element(f);
  WeightFamily w = WeightFamily::drury_arveson();
  const int m = f.spec()->m();
  EvaluationIdentity out;

  FueterSeries reassembled(f.center(), f.order());
  AlgebraElement f0 = f.coeff_at(mi_zero(m));
  if (!f0.is_zero()) reassembled.set_coeff(mi_zero(m), f0);
  for (int k = 1; k <= m; ++k)
    reassembled += truncate(mult_op(k, backward_shift(f, k)), f.order());
  out.series_telescopes = reassembled == f;

  out.form_lhs = hermitian_form(f, f, w);
  for (int k = 1; k <= m; ++k) {
    FueterSeries rf = backward_shift(f, k);
    out.form_lhs -= hermitian_form(rf, rf, w);
  }
  out.form_rhs = f0.involute() * f0;
  out.exact = out.series_telescopes && out.form_lhs == out.form_rhs;
  return out;
}

std::pair<AlgebraElement, AlgebraElement> fock_adjoint_check(int k, const FueterSeries& f,
                                                             const FueterSeries& g) {
  WeightFamily w = WeightFamily::fock();
  return {hermitian_form(derivative_op(k, f), g, w), hermitian_form(f, mult_op(k, g), w)};
}

std::pair<AlgebraElement, AlgebraElement> multiplier_kernel_pairing(
    const FueterSeries& s, const std::vector<AlgebraElement>& xi,
    const std::vector<AlgebraElement>& zeta, const AlgebraElement& b1,
    const AlgebraElement& b2, const WeightFamily& wc, const WeightFamily& wd,
    int kernel_order) {
  require_module_element(s);
  const auto& spec = s.spec();
  const int full = kernel_order + s.degree();

  // defining route: [K_d(.,xi) b1, M_s K_c(.,zeta) b2] in W(d)
  FueterSeries kd = kernel_series(xi, full, wd, b1);
  FueterSeries kc = kernel_series(zeta, kernel_order, wc, b2);
  FueterSeries ms_kc = cauchy_product(truncate(s, full), truncate(kc, full));
  AlgebraElement defining = hermitian_form(kd, ms_kc, wd);

  // closed form: b2^dag sum_gamma sym(zeta^gamma) (eval_xi(zeta^gamma odot s))^dag / c_gamma b1
  FueterPoint origin = FueterPoint::origin(spec);
  auto mono_zeta = sym_monomial_values(zeta, kernel_order);
  AlgebraElement inner = AlgebraElement::zero(spec);
  for (auto& [gamma, zg] : mono_zeta) {
    FueterSeries shifted(origin, full);
    for (auto& [delta, sv] : s.coeff()) shifted.set_coeff(mi_add(gamma, delta), sv);
    AlgebraElement at_xi = eval(shifted, xi);
    inner += zg * at_xi.involute() * Rational(1 / wc.c(gamma));
  }
  AlgebraElement closed = b2.involute() * inner * b1;
  return {defining, closed};
}

std::pair<AlgebraElement, AlgebraElement> multiplier_kernel_pairing(
    const FueterSeries& s, const FueterPoint& xi, const FueterPoint& zeta,
    const AlgebraElement& b1, const AlgebraElement& b2, const WeightFamily& wc,
    const WeightFamily& wd, int kernel_order) {
  return multiplier_kernel_pairing(s, xi.zetas(), zeta.zetas(), b1, b2, wc, wd, kernel_order);
}

std::vector<FueterSeries> blaschke_factor(const std::vector<AlgebraElement>& z, int order,
                                          double tol) {
  if (z.empty()) throw ShapeError("empty zeta tuple");
  const AlgebraPtr& spec = z[0].spec();
  const int m = spec->m();
  if (static_cast<int>(z.size()) != m) throw ShapeError("zeta tuple needs m entries");
  double nsq = 0;
  for (auto& zk : z) {
    double n = zk.norm();
    nsq += n * n;
  }
  if (std::sqrt(nsq) >= 1.0)
    throw ShapeError("Blaschke factor requires a point with norm below one");
  FueterPoint origin = FueterPoint::origin(spec);

  AlgebraElement xi_xi = AlgebraElement::zero(spec);
  for (auto& zk : z) xi_xi += zk * zk.involute();
  AlgebraElement left_sqrt =
      mat_sqrt_inv(MatrixOverA::from_element(AlgebraElement::one(spec) - xi_xi), SqrtKind::Sqrt,
                   tol)
          .scalar();

  MatrixOverA gram(spec, m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      gram.at(j, k) = -(z[j].involute() * z[k]);
      if (j == k) gram.at(j, k) += AlgebraElement::one(spec);
    }
  MatrixOverA right_inv_sqrt = mat_sqrt_inv(gram, SqrtKind::InvSqrt, tol);

  FueterSeries denom(origin, order);
  denom.set_coeff(mi_zero(m), AlgebraElement::one(spec));
  for (int k = 1; k <= m; ++k) {
    AlgebraElement c = -z[k - 1].involute();
    if (!c.is_zero()) denom.set_coeff(mi_unit(m, k), c);
  }
  FueterSeries resolvent = cauchy_inverse(denom);
  FueterSeries head = cauchy_product(constant_series(origin, left_sqrt, order), resolvent);

  std::vector<FueterSeries> w;
  for (int k = 1; k <= m; ++k) {
    FueterSeries var(origin, order);
    var.set_coeff(mi_unit(m, k), AlgebraElement::one(spec));
    if (!z[k - 1].is_zero()) var.set_coeff(mi_zero(m), -z[k - 1]);
    w.push_back(cauchy_product(head, var));
  }
  std::vector<FueterSeries> out;
  for (int j = 0; j < m; ++j) {
    FueterSeries bj(origin, order);
    for (int k = 0; k < m; ++k) {
      const AlgebraElement& factor = right_inv_sqrt.at(k, j);
      if (factor.is_zero()) continue;
      bj += cauchy_product(w[k], constant_series(origin, factor, order));
    }
    out.push_back(std::move(bj));
  }
  return out;
}

std::vector<FueterSeries> blaschke_factor(const FueterPoint& xi, int order, double tol) {
  return blaschke_factor(xi.zetas(), order, tol);
}

std::vector<MultiIndex> monomial_basis(int m, int order) { return indices_up_to(m, order); }

MatrixOverA multiplier_matrix(const FueterSeries& s, const std::vector<MultiIndex>& basis) {
  require_module_element(s);
  const int n = static_cast<int>(basis.size());
  MatrixOverA t(s.spec(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!mi_leq(basis[j], basis[i])) continue;
      auto it = s.coeff().find(mi_sub(basis[i], basis[j]));
      if (it != s.coeff().end()) t.at(i, j) = it->second;
    }
  return t;
}

MatrixOverA weighted_adjoint(const MatrixOverA& t, const std::vector<MultiIndex>& basis,
                             const WeightFamily& w) {
  const int n = static_cast<int>(basis.size());
  if (t.rows() != n || t.cols() != n) throw ShapeError("operator matrix size mismatch");
  std::vector<Rational> c;
  c.reserve(basis.size());
  for (auto& a : basis) c.push_back(w.c(a));
  MatrixOverA out(t.spec(), n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out.at(b, a) = t.at(a, b).involute() * (c[a] / c[b]);
  return out;
}

bool nondegenerate_pairing_implies_zero(const FueterSeries& g, const WeightFamily& w) {
  require_module_element(g);
  FueterPoint origin = FueterPoint::origin(g.spec());
  for (const auto& alpha : monomial_basis(g.spec()->m(), g.order())) {
    FueterSeries mono(origin, mi_total(alpha));
    mono.set_coeff(alpha, AlgebraElement::one(g.spec()));
    if (!hermitian_form(mono, g, w).is_zero()) return false;
  }
  return true;
}

std::vector<GramSignature> component_gram_signatures(const AlgebraPtr& spec,
                                                     const WeightFamily& w, int order,
                                                     double tol) {
  const int m = spec->m(), dim = spec->dim();
  auto basis = monomial_basis(m, order);
  FueterPoint origin = FueterPoint::origin(spec);
  std::vector<GramSignature> out;
  // the form pairs only equal multi-indices, so the Gram over monomial x
  // basis-element pairs is block diagonal with one dim x dim block per alpha
  for (int l = 0; l < dim; ++l) {
    GramSignature sig;
    sig.l = l;
    for (const auto& alpha : basis) {
      std::vector<std::vector<FieldScalar>> block(dim, std::vector<FieldScalar>(dim));
      for (int t = 0; t < dim; ++t) {
        FueterSeries ft(origin, mi_total(alpha));
        ft.set_coeff(alpha, AlgebraElement::basis(spec, t));
        for (int u = 0; u < dim; ++u) {
          FueterSeries fu(origin, mi_total(alpha));
          fu.set_coeff(alpha, AlgebraElement::basis(spec, u));
          block[u][t] = component_form(ft, fu, w, l);
        }
      }
      for (double ev : hermitian_part_eigenvalues(block)) {
        if (ev > tol)
          ++sig.positive;
        else if (ev < -tol)
          ++sig.negative;
        else
          ++sig.zero;
      }
    }
    out.push_back(sig);
  }
  return out;
}

BlaschkeGramReport blaschke_gram_check(const std::vector<AlgebraElement>& z, int order,
                                       double tol) {
  if (z.empty()) throw ShapeError("empty zeta tuple");
  const AlgebraPtr& spec = z[0].spec();
  const int m = spec->m();
  WeightFamily w = WeightFamily::drury_arveson();
  auto basis = monomial_basis(m, order);
  const int n = static_cast<int>(basis.size());

  auto b = blaschke_factor(z, order, tol);
  MatrixOverA lhs = MatrixOverA::identity(spec, n);
  for (int j = 0; j < m; ++j) {
    MatrixOverA bj = multiplier_matrix(b[j], basis);
    lhs -= bj * weighted_adjoint(bj, basis, w);
  }

  // T = M_zeta M_xi^*: strictly degree raising, so the resolvent inverse is
  // the finite Neumann sum on the truncated basis.
  MatrixOverA t(spec, n, n);
  std::map<MultiIndex, int> pos;
  for (int i = 0; i < n; ++i) pos[basis[i]] = i;
  for (int j = 0; j < n; ++j)
    for (int k = 1; k <= m; ++k) {
      MultiIndex up = mi_add(basis[j], mi_unit(m, k));
      auto it = pos.find(up);
      if (it == pos.end()) continue;
      t.at(it->second, j) += z[k - 1].involute();
    }
  MatrixOverA xinv = MatrixOverA::identity(spec, n);
  MatrixOverA power = MatrixOverA::identity(spec, n);
  for (int d = 1; d <= order; ++d) {
    power = t * power;
    xinv += power;
  }

  AlgebraElement xi_xi = AlgebraElement::zero(spec);
  for (auto& zk : z) xi_xi += zk * zk.involute();
  AlgebraElement sfac =
      mat_sqrt_inv(MatrixOverA::from_element(AlgebraElement::one(spec) - xi_xi), SqrtKind::Sqrt,
                   tol)
          .scalar();
  MatrixOverA smat(spec, n, n);
  for (int i = 0; i < n; ++i) smat.at(i, i) = sfac;
  MatrixOverA e00(spec, n, n);
  e00.at(0, 0) = AlgebraElement::one(spec);

  MatrixOverA rhs = smat * xinv * e00 * weighted_adjoint(xinv, basis, w) * smat;

  BlaschkeGramReport rep;
  rep.order = order;
  rep.tol = tol;
  MatrixOverA diff = lhs - rhs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rep.max_error = std::max(rep.max_error,
                               operator_two_norm(diff.at(i, j).left_regular()));
  return rep;
}

BlaschkeGramReport blaschke_gram_check(const FueterPoint& xi, int order, double tol) {
  return blaschke_gram_check(xi.zetas(), order, tol);
}

}  // namespace fueterkit
