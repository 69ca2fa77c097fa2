#include "fueterkit/checks.hpp"

#include <cmath>
#include <sstream>

namespace fueterkit {

namespace {

FueterSeries monomial(const FueterPoint& center, const MultiIndex& alpha,
                      const AlgebraElement& c) {
  FueterSeries s(center, mi_total(alpha));
  s.set_coeff(alpha, c);
  return s;
}

FueterSeries unit_monomial(const FueterPoint& center, const MultiIndex& alpha) {
  return monomial(center, alpha, AlgebraElement::one(center.spec()));
}

MatrixSeries stack_series(const MatrixSeries& a, const MatrixSeries& b, bool horizontal) {
  int rows = horizontal ? a.rows() : a.rows() + b.rows();
  int cols = horizontal ? a.cols() + b.cols() : a.cols();
  MatrixSeries out(a.center(), std::min(a.order(), b.order()), rows, cols);
  for (const auto& alpha : indices_up_to(a.spec()->m(), out.order())) {
    MatrixOverA va = a.coeff_at(alpha), vb = b.coeff_at(alpha);
    MatrixOverA merged = horizontal ? hstack(va, vb) : vstack(va, vb);
    if (!merged.is_zero()) out.set_coeff(alpha, merged);
  }
  return out;
}

}  // namespace

CheckReport check_algebra_valid(const AlgebraPtr& spec, int samples, uint64_t seed, double tol) {
  CheckReport rep{"algebra_valid", spec->name(), "", 0};
  auto v = validate_spec(spec, samples, seed, tol);
  rep.pass = v.all_pass();
  Json items = Json::array();
  for (auto& i : v.items)
    items.push_back(Json{{"check", i.check}, {"pass", i.pass}, {"detail", i.detail}});
  rep.details["items"] = items;
  return rep;
}

CheckReport check_monomial_hyperholomorphy(const AlgebraPtr& spec, int order, int centers,
                                           uint64_t seed) {
  CheckReport rep{"monomial_hyperholomorphy", spec->name(), "", order};
  RandomSource rng(seed);
  const int m = spec->m();
  int checked = 0, failures = 0;
  for (int c = 0; c < centers; ++c) {
    FueterPoint xi = c == 0 ? FueterPoint::origin(spec) : rng.point(spec);
    for (const auto& alpha : indices_up_to(m, order)) {
      if (!apply_dirac(monomial_expand(alpha, xi)).is_zero()) ++failures;
      ++checked;
    }
  }
  rep.pass = failures == 0;
  rep.details = Json{{"monomials_checked", checked}, {"failures", failures}};
  return rep;
}

CheckReport check_commutator_obstruction(const AlgebraPtr& spec) {
  CheckReport rep{"commutator_obstruction", spec->name(), "", 2};
  const int m = spec->m();
  FueterPoint origin = FueterPoint::origin(spec);
  int failures = 0, pairs = 0;
  for (int j = 1; j <= m; ++j) {
    VPolynomial zj = monomial_expand(mi_unit(m, j), origin);
    for (int k = j + 1; k <= m; ++k) {
      VPolynomial zk = monomial_expand(mi_unit(m, k), origin);
      AlgebraElement comm = AlgebraElement::basis(spec, j) * AlgebraElement::basis(spec, k) -
                            AlgebraElement::basis(spec, k) * AlgebraElement::basis(spec, j);
      std::vector<int> v0(spec->dim(), 0), v0sq(spec->dim(), 0);
      v0[0] = 1;
      v0sq[0] = 2;
      // zeta_j zeta_k - zeta_k zeta_j = [e_j, e_k] v_0^2, exactly
      VPolynomial comm_poly(spec);
      comm_poly.add_term(v0sq, comm);
      if (!(zj * zk - zk * zj == comm_poly)) ++failures;
      // D of the quadratic leaves the degree-one obstruction [e_j, e_k] v_0
      VPolynomial expected(spec);
      expected.add_term(v0, comm);
      if (!(apply_dirac(zj * zk) == expected)) ++failures;
      if (!apply_dirac(zj * zk + zk * zj).is_zero()) ++failures;
      ++pairs;
    }
  }
  rep.pass = failures == 0;
  rep.details = Json{{"pairs", pairs}, {"failures", failures}};
  return rep;
}

CheckReport check_center_dependence() {
  AlgebraPtr spec = builtin_algebra("quaternions");
  CheckReport rep{"center_dependence", spec->name(), "", 2};
  const int m = spec->m();
  FueterPoint origin = FueterPoint::origin(spec);
  AlgebraElement iq = AlgebraElement::basis(spec, 1);
  AlgebraElement jq = AlgebraElement::basis(spec, 2);
  AlgebraElement kq = AlgebraElement::basis(spec, 3);

  FueterSeries p1 = monomial(origin, mi_unit(m, 1), kq);  // zeta_1 k
  FueterSeries p2 = monomial(origin, mi_unit(m, 1), iq);  // zeta_1 i
  FueterSeries p = cauchy_product(truncate(p1, 2), truncate(p2, 2));

  FueterSeries expect_p(origin, 2);
  expect_p.set_coeff({2, 0, 0}, jq);
  bool ok = p == expect_p;

  // center with zeta_k = e_k, i.e. base point (-1, 0, 0, 0)
  FueterPoint xi(spec, {FieldScalar(Rational(-1)), FieldScalar(), FieldScalar(), FieldScalar()});
  FueterSeries p1x = recenter(truncate(p1, 2), xi);
  FueterSeries p2x = recenter(truncate(p2, 2), xi);
  FueterSeries expect_p1x(xi, 2);  // (zeta_1 - i)k - j
  expect_p1x.set_coeff({1, 0, 0}, kq);
  expect_p1x.set_coeff({0, 0, 0}, -jq);
  ok = ok && p1x == expect_p1x;

  FueterSeries q = cauchy_product(p1x, p2x);
  FueterSeries q0 = recenter(q, origin);
  FueterSeries expect_q(origin, 2);  // zeta_1^2 j - 2 zeta_1 k
  expect_q.set_coeff({2, 0, 0}, jq);
  expect_q.set_coeff({1, 0, 0}, kq * Rational(-2));
  ok = ok && q0 == expect_q && !(q0 == p);

  rep.pass = ok;
  rep.details = Json{{"product_at_origin", series_str(p)}, {"product_recentered", series_str(q0)}};
  return rep;
}

CheckReport check_gleason(const AlgebraPtr& spec, int count, int order, uint64_t seed) {
  CheckReport rep{"gleason_residual", spec->name(), "", order};
  RandomSource rng(seed);
  int failures = 0;
  for (int t = 0; t < count; ++t) {
    FueterPoint xi = (t % 2 == 0) ? FueterPoint::origin(spec) : rng.point(spec);
    FueterSeries f = rng.series(xi, order, 2 * order + 2);
    auto g = gleason_solve(f);
    if (!gleason_residual(f, g).is_zero()) ++failures;
  }
  rep.pass = failures == 0;
  rep.details = Json{{"functions", count}, {"failures", failures}};
  return rep;
}

CheckReport check_realization_calculus(const AlgebraPtr& spec, int count, int order,
                                       uint64_t seed, int heavy_count) {
  CheckReport rep{"realization_calculus", spec->name(), "", order};
  RandomSource rng(seed);
  FueterPoint origin = FueterPoint::origin(spec);
  if (heavy_count < 0) heavy_count = count;
  int failures = 0;
  Json fails = Json::array();
  auto expect = [&](bool ok, const char* what) {
    if (!ok) {
      ++failures;
      fails.push_back(what);
    }
  };
  for (int t = 0; t < count; ++t) {
    FueterPoint center = (t % 2 == 0) ? origin : rng.point(spec);
    Realization r1 = rng.realization(center, 2, 1, 1);
    r1.D = MatrixOverA::from_element(rng.invertible_element(spec));
    Realization r2 = rng.realization(center, 2, 1, 1);

    MatrixSeries s1 = to_series(r1, order, ExpandMethod::TaylorFormula);
    expect(s1 == to_series(r1, order, ExpandMethod::Neumann), "taylor_vs_neumann");
    if (t >= heavy_count) continue;

    MatrixSeries s2 = to_series(r2, order, ExpandMethod::Neumann);
    expect(to_series(product(r1, r2), order, ExpandMethod::TaylorFormula) ==
               cauchy_product(s1, s2),
           "product_realization");
    expect(to_series(sum(r1, r2), order, ExpandMethod::TaylorFormula) == s1 + s2,
           "sum_realization");
    expect(to_series(concat_row(r1, r2), order, ExpandMethod::TaylorFormula) ==
               stack_series(s1, s2, true),
           "concat_row");
    expect(to_series(concat_col(r1, r2), order, ExpandMethod::TaylorFormula) ==
               stack_series(s1, s2, false),
           "concat_col");

    Realization rinv = inverse(r1);
    MatrixSeries si = to_series(rinv, order, ExpandMethod::Neumann);
    MatrixSeries one = constant_series(center, MatrixOverA::identity(spec, 1), order);
    expect(cauchy_product(s1, si) == one, "inverse_right");
    expect(cauchy_product(si, s1) == one, "inverse_left");

    MatrixSeries p = rng.matrix_series(center, std::min(order, 3), 1, 1, 4);
    expect(to_series(from_polynomial(p), order, ExpandMethod::TaylorFormula) == p,
           "from_polynomial_roundtrip");

    MatrixOverA eta = rng.matrix(spec, 1, 1);
    auto g = gleason_via_realization(r1, eta, order);
    MatrixSeries f = cauchy_product(s1, constant_series(center, eta, order));
    expect(gleason_residual_matrix(f, g).is_zero(), "gleason_via_realization");
  }
  rep.pass = failures == 0;
  rep.details =
      Json{{"realizations", count}, {"composite_samples", heavy_count}, {"failures", failures}};
  if (!fails.empty()) rep.details["failed_items"] = fails;
  return rep;
}

CheckReport check_backward_shift_invariance(const AlgebraPtr& spec, int order, uint64_t seed) {
  CheckReport rep{"resolvent_invariance", spec->name(), "", order};
  RandomSource rng(seed);
  FueterPoint origin = FueterPoint::origin(spec);
  const int m = spec->m();
  bool ok = true;

  // commuting family: all state matrices equal
  MatrixOverA a = rng.matrix(spec, 2, 2);
  std::vector<MatrixOverA> as(m, a);
  MatrixOverA g0 = rng.matrix(spec, 1, 2);
  MatrixSeries g = resolvent_span(origin, as, g0, order);

  MatrixSeries closed(origin, order, 1, 2);
  auto powers = sym_matrix_powers(as, order);
  for (auto& [alpha, pw] : powers) {
    MatrixOverA coeff = (g0 * pw) * mi_multinomial(alpha);
    if (!coeff.is_zero()) closed.set_coeff(alpha, coeff);
  }
  ok = ok && g == closed;

  for (int k = 1; k <= m; ++k) {
    MatrixSeries lhs = backward_shift(g, k);
    MatrixSeries rhs =
        truncate(cauchy_product(g, constant_series(origin, a, order)), order - 1);
    ok = ok && lhs == rhs;
  }

  // strictness witness: a non-commuting pair breaks R_k G = G A_k
  if (m >= 2) {
    MatrixOverA n1(spec, 2, 2), n2(spec, 2, 2);
    n1.at(0, 1) = AlgebraElement::one(spec);
    n2.at(1, 0) = AlgebraElement::one(spec);
    std::vector<MatrixOverA> bs(m, MatrixOverA::zero(spec, 2, 2));
    bs[0] = n1;
    bs[1] = n2;
    MatrixSeries gnc = resolvent_span(origin, bs, MatrixOverA::identity(spec, 2), order);
    bool some_mismatch = false;
    for (int k = 1; k <= m; ++k) {
      MatrixSeries lhs = backward_shift(gnc, k);
      MatrixSeries rhs =
          truncate(cauchy_product(gnc, constant_series(origin, bs[k - 1], order)), order - 1);
      if (!(lhs == rhs)) some_mismatch = true;
    }
    ok = ok && some_mismatch;
    rep.details["noncommuting_witness"] = some_mismatch;
  }
  rep.pass = ok;
  return rep;
}

CheckReport check_da_structure(const AlgebraPtr& spec, int order, uint64_t seed) {
  CheckReport rep{"drury_arveson_structure", spec->name(), "drury_arveson", order};
  RandomSource rng(seed);
  FueterPoint origin = FueterPoint::origin(spec);
  const int m = spec->m();
  WeightFamily da = WeightFamily::drury_arveson();
  auto basis = monomial_basis(m, order);
  bool ok = true;

  std::vector<FueterSeries> monos;
  monos.reserve(basis.size());
  for (const auto& alpha : basis) monos.push_back(unit_monomial(origin, alpha));

  for (int k = 1; k <= m; ++k) {
    std::vector<FueterSeries> shifted, raised;
    for (size_t i = 0; i < basis.size(); ++i) {
      shifted.push_back(backward_shift(monos[i], k));
      raised.push_back(mult_op(k, monos[i]));
    }
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = 0; b < basis.size(); ++b) {
        AlgebraElement lhs = hermitian_form(shifted[a], monos[b], da);
        AlgebraElement rhs = hermitian_form(monos[a], raised[b], da);
        if (!(lhs == rhs)) ok = false;
        MultiIndex up = mi_add(basis[b], mi_unit(m, k));
        Rational expect = basis[a] == up
                              ? Rational(mi_factorial(up), factorial(mi_total(up)))
                              : Rational(0);
        if (!(lhs == AlgebraElement::scalar(spec, FieldScalar(expect)))) ok = false;
      }
  }

  for (int t = 0; t < 5; ++t) {
    FueterSeries f = rng.series(origin, order, 2 * order);
    FueterSeries g = rng.series(origin, order, 2 * order);
    for (int k = 1; k <= m; ++k) {
      auto [lhs, rhs] = da_adjoint_check(k, f, g);
      if (!(lhs == rhs)) ok = false;
      auto gap = da_contraction_gap(f, k);
      if (!gap.exact) ok = false;
    }
    auto id = evaluation_identity_check(f);
    if (!id.exact) ok = false;
  }
  rep.pass = ok;
  rep.details = Json{{"monomial_pairs", basis.size() * basis.size() * m}};
  return rep;
}

CheckReport check_fock_structure(const AlgebraPtr& spec, int order, int pairs, uint64_t seed) {
  CheckReport rep{"fock_structure", spec->name(), "fock", order};
  RandomSource rng(seed);
  FueterPoint origin = FueterPoint::origin(spec);
  const int m = spec->m();
  WeightFamily fock = WeightFamily::fock();
  bool ok = true;

  auto basis = monomial_basis(m, order);
  std::vector<FueterSeries> monos;
  monos.reserve(basis.size());
  for (const auto& alpha : basis) monos.push_back(unit_monomial(origin, alpha));
  for (int k = 1; k <= m; ++k) {
    std::vector<FueterSeries> derived, raised;
    for (size_t i = 0; i < basis.size(); ++i) {
      derived.push_back(derivative_op(k, monos[i]));
      raised.push_back(mult_op(k, monos[i]));
    }
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = 0; b < basis.size(); ++b) {
        AlgebraElement lhs = hermitian_form(derived[a], monos[b], fock);
        AlgebraElement rhs = hermitian_form(monos[a], raised[b], fock);
        if (!(lhs == rhs)) ok = false;
        Rational expect = basis[a] == mi_add(basis[b], mi_unit(m, k))
                              ? Rational(mi_factorial(basis[a]))
                              : Rational(0);
        if (!(lhs == AlgebraElement::scalar(spec, FieldScalar(expect)))) ok = false;
      }
  }

  for (int t = 0; t < pairs; ++t) {
    FueterSeries f = rng.series(origin, order, 2 * order);
    FueterSeries g = rng.series(origin, order, 2 * order);
    for (int k = 1; k <= m; ++k) {
      auto [lhs, rhs] = fock_adjoint_check(k, f, g);
      if (!(lhs == rhs)) ok = false;
    }
    // partial derivative operators commute
    if (m >= 2 &&
        !(derivative_op(1, derivative_op(2, f)) == derivative_op(2, derivative_op(1, f))))
      ok = false;
  }
  rep.pass = ok;
  rep.details = Json{{"random_pairs", pairs}};
  return rep;
}

CheckReport check_reproducing(const AlgebraPtr& spec, int order, int vectors, uint64_t seed) {
  CheckReport rep{"reproducing_property", spec->name(), "drury_arveson+fock", order};
  RandomSource rng(seed);
  FueterPoint origin = FueterPoint::origin(spec);
  bool ok = true;
  for (WeightFamily w : {WeightFamily::drury_arveson(), WeightFamily::fock()}) {
    for (int t = 0; t < 3; ++t) {
      FueterSeries f = rng.series(origin, order, 2 * order);
      FueterPoint xi = rng.point(spec);
      for (int b = 0; b < vectors; ++b) {
        auto [lhs, rhs] = reproducing_check(f, xi, rng.element(spec), w, order);
        if (!(lhs == rhs)) ok = false;
      }
    }
  }
  rep.pass = ok;
  rep.details = Json{{"vectors", vectors}};
  return rep;
}

CheckReport check_blaschke(double tol) {
  AlgebraPtr spec = builtin_algebra("quaternions");
  CheckReport rep{"blaschke_factor", spec->name(), "drury_arveson", 4};
  const int m = spec->m();
  FueterPoint origin = FueterPoint::origin(spec);
  bool ok = true;

  auto b0 = blaschke_factor(origin, 3, tol);
  for (int k = 1; k <= m; ++k)
    if (!(b0[k - 1] == var_minus_center(origin, k, 3))) ok = false;

  // the zeta tuple (i/2, 0, 0)
  std::vector<AlgebraElement> xi{AlgebraElement::basis(spec, 1) * Rational(1, 2),
                                 AlgebraElement::zero(spec), AlgebraElement::zero(spec)};
  const int eval_order = 14;
  auto b = blaschke_factor(xi, eval_order, tol);
  double sq = 0;
  for (int j = 0; j < m; ++j) {
    double n = eval(b[j], xi).norm();
    sq += n * n;
  }
  double at_xi = std::sqrt(sq);
  if (!(at_xi <= 1e-7)) ok = false;

  auto gram = blaschke_gram_check(xi, 4, tol);
  if (!(gram.max_error <= 1e-6)) ok = false;

  rep.pass = ok;
  rep.max_error = gram.max_error;
  rep.details = Json{{"eval_at_xi", at_xi},
                     {"eval_order", eval_order},
                     {"gram_error", gram.max_error},
                     {"tol", tol}};
  return rep;
}

CheckReport check_frechet(int count, uint64_t seed) {
  AlgebraPtr spec = builtin_algebra("quaternions");
  CheckReport rep{"frechet_derivative", spec->name(), "", 4};
  RandomSource rng(seed);
  const int m = spec->m();
  FueterPoint origin = FueterPoint::origin(spec);
  std::vector<Rational> scales{Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
  bool ok = true;

  auto directions = [&]() {
    std::vector<std::vector<FieldScalar>> dirs;
    for (int d = 0; d < 3; ++d) {
      std::vector<FieldScalar> u(spec->dim());
      u[0] = FieldScalar(rng.nonzero_rational());
      for (int i = 1; i <= m; ++i) u[i] = FieldScalar(rng.rational());
      dirs.push_back(std::move(u));
    }
    return dirs;
  };

  double worst_slope = std::numeric_limits<double>::infinity();
  for (int t = 0; t < count; ++t) {
    FueterSeries f = rng.series(origin, 4, 6);
    FueterPoint xi = rng.point(spec);
    auto repF = frechet_check(to_vpoly(f), xi, scales, directions());
    if (!repF.hyperholomorphic) ok = false;
    if (!repF.exact_zero) worst_slope = std::min(worst_slope, repF.min_slope);
  }

  // pointwise zeta_1 zeta_2 is the non-hyperholomorphic witness
  VPolynomial witness = monomial_expand(mi_unit(m, 1), origin) *
                        monomial_expand(mi_unit(m, 2), origin);
  FueterPoint xi(spec, {FieldScalar(Rational(1)), FieldScalar(Rational(1, 2)),
                        FieldScalar(Rational(-1, 3)), FieldScalar(Rational(2, 5))});
  auto repW = frechet_check(witness, xi, scales, directions());
  bool witness_flagged = !repW.hyperholomorphic;
  ok = ok && witness_flagged;

  rep.pass = ok;
  rep.details["worst_slope"] =
      std::isfinite(worst_slope) ? Json(worst_slope) : Json("all_exact");
  rep.details["witness_flagged"] = witness_flagged;
  rep.details["witness_slope"] = repW.min_slope;
  return rep;
}

CheckReport check_kernel_agreement(const AlgebraPtr& spec, int order, uint64_t seed) {
  CheckReport rep{"kernel_agreement", spec->name(), "", order};
  RandomSource rng(seed);
  FueterPoint origin = FueterPoint::origin(spec);
  bool ok = true;

  FueterSeries f = rng.series(origin, order, 3 * order);
  FueterSeries g = rng.series(origin, order, 3 * order);
  auto serial = kernels::convolve_serial(f.coeff(), g.coeff(), order);
  auto parallel = kernels::convolve_parallel(f.coeff(), g.coeff(), order);
  ok = ok && serial == parallel;

  MatrixOverA ma = rng.matrix(spec, 6, 6), mb = rng.matrix(spec, 6, 6);
  ok = ok && mat_mul(ma, mb, kernels::Exec::Serial) == mat_mul(ma, mb, kernels::Exec::Parallel);

  rep.pass = ok;
  return rep;
}

std::vector<CheckReport> run_suite(const AlgebraPtr& spec, int order, uint64_t seed, double tol) {
  std::vector<CheckReport> out;
  out.push_back(check_algebra_valid(spec, 50, seed, tol));
  out.push_back(check_monomial_hyperholomorphy(spec, order, 3, seed + 1));
  out.push_back(check_commutator_obstruction(spec));
  out.push_back(check_kernel_agreement(spec, order, seed + 2));
  out.push_back(check_gleason(spec, 10, order, seed + 3));
  out.push_back(check_realization_calculus(spec, 5, order, seed + 4, 3));
  out.push_back(check_backward_shift_invariance(spec, order, seed + 5));
  out.push_back(check_da_structure(spec, order, seed + 6));
  out.push_back(check_fock_structure(spec, order, 10, seed + 7));
  out.push_back(check_reproducing(spec, std::min(order, 3), 5, seed + 8));
  if (spec->name() == "quaternions") {
    out.push_back(check_center_dependence());
    out.push_back(check_blaschke(1e-8));
    out.push_back(check_frechet(5, seed + 9));
  }
  return out;
}

}  // namespace fueterkit
