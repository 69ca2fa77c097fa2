#include <doctest.h>

#include "fueterkit/random_source.hpp"

using namespace fueterkit;

namespace {

AlgebraElement e(const AlgebraPtr& s, int k) { return AlgebraElement::basis(s, k); }

MatrixSeries ident_series(const FueterPoint& c, int n, int order) {
  return constant_series(c, MatrixOverA::identity(c.spec(), n), order, Side::Left);
}

}  // namespace

TEST_CASE("constant and monomial atoms expand as stated") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  RandomSource rng(101);

  MatrixOverA m = rng.matrix(q, 2, 3);
  auto cr = constant_realization(zero, m);
  auto s = to_series(cr, 3, ExpandMethod::TaylorFormula);
  CHECK(s.coeff_at(mi_zero(3)) == m);
  CHECK(s.coeff().size() == 1);
  CHECK(s == to_series(cr, 3, ExpandMethod::Neumann));

  auto mr = monomial_realization(zero, 2, m);
  auto sm = to_series(mr, 3, ExpandMethod::TaylorFormula);
  CHECK(sm.coeff_at({0, 1, 0}) == m);
  CHECK(sm.coeff().size() == 1);
  CHECK(sm == to_series(mr, 3, ExpandMethod::Neumann));

  // zero polynomial realizes to the zero series
  auto zr = constant_realization(zero, MatrixOverA::zero(q, 2, 2));
  CHECK(to_series(zr, 3, ExpandMethod::Neumann).is_zero());
}

TEST_CASE("first-order Taylor coefficient is C B_k") {
  auto q = builtin_algebra("quaternions");
  RandomSource rng(103);
  auto center = rng.point(q);
  auto r = rng.realization(center, 2, 2, 2);
  auto s = to_series(r, 1, ExpandMethod::TaylorFormula);
  for (int k = 1; k <= 3; ++k) CHECK(s.coeff_at(mi_unit(3, k)) == r.C * r.B[k - 1]);
  CHECK(s == to_series(r, 1, ExpandMethod::Neumann));
}

TEST_CASE("taylor formula agrees with the Neumann expansion") {
  for (const char* name : {"quaternions", "split_quaternions", "ternary"}) {
    auto spec = builtin_algebra(name);
    RandomSource rng(107);
    for (int t = 0; t < 5; ++t) {
      auto center = t % 2 ? rng.point(spec) : FueterPoint::origin(spec);
      auto r = rng.realization(center, 2, 1, 1);
      CHECK(to_series(r, 4, ExpandMethod::TaylorFormula) ==
            to_series(r, 4, ExpandMethod::Neumann));
    }
  }
}

TEST_CASE("realization inverse") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  RandomSource rng(109);

  // constant M inverts to constant M^{-1}
  auto m = rng.invertible_matrix(q, 2);
  auto ci = inverse(constant_realization(zero, m));
  CHECK(to_series(ci, 2, ExpandMethod::Neumann).coeff_at(mi_zero(3)) == mat_invert(m));

  // 1 - zeta_1 inverts to the geometric series
  Realization lin{zero,
                  std::vector<MatrixOverA>(3, MatrixOverA::zero(q, 1, 1)),
                  std::vector<MatrixOverA>(3, MatrixOverA::zero(q, 1, 1)),
                  MatrixOverA::identity(q, 1), MatrixOverA::identity(q, 1)};
  lin.B[0] = -MatrixOverA::identity(q, 1);  // D + C (zeta_1 B_1) = 1 - zeta_1
  auto gi = to_series(inverse(lin), 5, ExpandMethod::Neumann);
  FueterSeries flat(zero, 5);
  flat.set_coeff({0, 0, 0}, AlgebraElement::one(q));
  flat.set_coeff({1, 0, 0}, -AlgebraElement::one(q));
  auto geo = cauchy_inverse(flat);
  for (int n = 0; n <= 5; ++n) CHECK(gi.coeff_at({n, 0, 0}).scalar() == geo.coeff_at({n, 0, 0}));

  for (int t = 0; t < 4; ++t) {
    auto center = t % 2 ? rng.point(q) : zero;
    auto r = rng.realization(center, 2, 2, 2);
    r.D = rng.invertible_matrix(q, 2);
    auto ri = inverse(r);
    auto s = to_series(r, 4, ExpandMethod::Neumann);
    auto si = to_series(ri, 4, ExpandMethod::Neumann);
    CHECK(cauchy_product(s, si) == ident_series(center, 2, 4));
    CHECK(cauchy_product(si, s) == ident_series(center, 2, 4));
    // double flip
    CHECK(to_series(inverse(ri), 4, ExpandMethod::Neumann) == s);
  }

  auto bad = rng.realization(zero, 2, 1, 1);
  bad.D = MatrixOverA::zero(q, 1, 1);
  CHECK_THROWS_AS(inverse(bad), NotInvertibleError);
}

TEST_CASE("sum, product and concatenations match series oracles") {
  auto q = builtin_algebra("grassmann:2");
  RandomSource rng(113);
  for (int t = 0; t < 3; ++t) {
    auto center = t % 2 ? rng.point(q) : FueterPoint::origin(q);
    auto r1 = rng.realization(center, 2, 1, 1);
    auto r2 = rng.realization(center, 1, 1, 1);
    auto s1 = to_series(r1, 4, ExpandMethod::Neumann);
    auto s2 = to_series(r2, 4, ExpandMethod::Neumann);

    CHECK(to_series(product(r1, r2), 4, ExpandMethod::Neumann) == cauchy_product(s1, s2));
    CHECK(to_series(sum(r1, r2), 4, ExpandMethod::Neumann) == s1 + s2);

    auto row = to_series(concat_row(r1, r2), 4, ExpandMethod::Neumann);
    auto col = to_series(concat_col(r1, r2), 4, ExpandMethod::Neumann);
    for (const auto& alpha : indices_up_to(q->m(), 4)) {
      CHECK(row.coeff_at(alpha) == hstack(s1.coeff_at(alpha), s2.coeff_at(alpha)));
      CHECK(col.coeff_at(alpha) == vstack(s1.coeff_at(alpha), s2.coeff_at(alpha)));
    }
  }

  // product of constants is the constant product
  auto zero = FueterPoint::origin(q);
  auto m1 = rng.matrix(q, 2, 2), m2 = rng.matrix(q, 2, 2);
  auto pc = product(constant_realization(zero, m1), constant_realization(zero, m2));
  CHECK(to_series(pc, 2, ExpandMethod::Neumann).coeff_at(mi_zero(q->m())) == m1 * m2);

  // center mismatch is rejected
  auto ra = rng.realization(zero, 1, 1, 1);
  auto rb = rng.realization(rng.point(q), 1, 1, 1);
  CHECK_THROWS_AS(product(ra, rb), SpecMismatchError);
}

TEST_CASE("from_polynomial round trips") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  RandomSource rng(127);

  // zeta_1^2 j from the worked example: atoms for zeta_1 k and zeta_1 i
  auto atom1 = monomial_realization(zero, 1, MatrixOverA::from_element(e(q, 3)));
  auto atom2 = monomial_realization(zero, 1, MatrixOverA::from_element(e(q, 1)));
  auto sq = to_series(product(atom1, atom2), 2, ExpandMethod::Neumann);
  CHECK(sq.coeff_at({2, 0, 0}).scalar() == e(q, 2));
  CHECK(sq.coeff().size() == 1);

  for (int t = 0; t < 4; ++t) {
    auto center = t % 2 ? rng.point(q) : zero;
    auto p = rng.matrix_series(center, 3, 2, 1, 5);
    auto r = from_polynomial(p);
    CHECK(to_series(r, 3, ExpandMethod::TaylorFormula) == p);
    CHECK(to_series(r, 4, ExpandMethod::Neumann) == p);  // no spurious higher terms
  }

  auto zerop = MatrixSeries(zero, 2, 1, 1);
  CHECK(to_series(from_polynomial(zerop), 2, ExpandMethod::Neumann).is_zero());
}

TEST_CASE("resolvent spans and commuting backward-shift invariance") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  RandomSource rng(131);

  // all A_k = 0: G = G0
  auto g0 = rng.matrix(q, 1, 2);
  std::vector<MatrixOverA> zeros(3, MatrixOverA::zero(q, 2, 2));
  auto g = resolvent_span(zero, zeros, g0, 3);
  CHECK(g.coeff_at(mi_zero(3)) == g0);
  CHECK(g.coeff().size() == 1);

  // commuting family: closed form and R_k G = G A_k
  auto a = rng.matrix(q, 2, 2);
  std::vector<MatrixOverA> as(3, a);
  auto gc = resolvent_span(zero, as, g0, 4);
  auto powers = sym_matrix_powers(as, 4);
  for (auto& [alpha, pw] : powers)
    CHECK(gc.coeff_at(alpha) == (g0 * pw) * mi_multinomial(alpha));
  for (int k = 1; k <= 3; ++k) {
    auto lhs = backward_shift(gc, k);
    auto rhs = truncate(cauchy_product(gc, constant_series(zero, a, 4, Side::Left)), 3);
    CHECK(lhs == rhs);
  }

  // non-commuting pair: some direction violates R_k G = G A_k
  MatrixOverA n1(q, 2, 2), n2(q, 2, 2);
  n1.at(0, 1) = AlgebraElement::one(q);
  n2.at(1, 0) = AlgebraElement::one(q);
  std::vector<MatrixOverA> bs{n1, n2, MatrixOverA::zero(q, 2, 2)};
  auto gn = resolvent_span(zero, bs, MatrixOverA::identity(q, 2), 4);
  bool mismatch = false;
  for (int k = 1; k <= 3; ++k)
    if (!(backward_shift(gn, k) ==
          truncate(cauchy_product(gn, constant_series(zero, bs[k - 1], 4, Side::Left)), 3)))
      mismatch = true;
  CHECK(mismatch);
}

TEST_CASE("Gleason through the realization") {
  auto q = builtin_algebra("quaternions");
  RandomSource rng(137);
  for (int t = 0; t < 4; ++t) {
    auto center = t % 2 ? rng.point(q) : FueterPoint::origin(q);
    auto r = rng.realization(center, 2, 2, 1);
    MatrixOverA eta = rng.matrix(q, 2, 1);
    auto g = gleason_via_realization(r, eta, 4);
    auto f = cauchy_product(to_series(r, 4, ExpandMethod::Neumann),
                            constant_series(center, eta, 4, Side::Left));
    CHECK(gleason_residual_matrix(f, g).is_zero());
  }

  // all A_k = 0: g_k = C B_k eta as constants
  auto zero = FueterPoint::origin(q);
  auto r0 = rng.realization(zero, 2, 1, 1);
  for (auto& a : r0.A) a = MatrixOverA::zero(q, 2, 2);
  MatrixOverA eta = rng.matrix(q, 1, 1);
  auto g = gleason_via_realization(r0, eta, 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(g[k - 1].coeff_at(mi_zero(3)) == r0.C * (r0.B[k - 1] * eta));
    CHECK(g[k - 1].coeff().size() <= 1);
  }
}
