#include <doctest.h>

#include <cmath>
#include <complex>

#include "fueterkit/random_source.hpp"

using namespace fueterkit;

namespace {

AlgebraElement e(const AlgebraPtr& s, int k) { return AlgebraElement::basis(s, k); }

FueterPoint pt(const AlgebraPtr& s, std::vector<Rational> v) {
  std::vector<FieldScalar> c;
  for (auto& x : v) c.emplace_back(x);
  return {s, std::move(c)};
}

FueterSeries mono(const FueterPoint& c, MultiIndex a, const AlgebraElement& v) {
  FueterSeries s(c, mi_total(a));
  s.set_coeff(a, v);
  return s;
}

// double-precision evaluation of a VPolynomial, used by the quadrature oracle
std::vector<double> eval_double(const VPolynomial& p, const std::vector<double>& v) {
  const auto& spec = p.spec();
  std::vector<double> out(spec->dim(), 0.0);
  for (auto& [exp, coeff] : p.terms()) {
    double monom = 1;
    for (size_t i = 0; i < exp.size(); ++i)
      for (int r = 0; r < exp[i]; ++r) monom *= v[i];
    for (int l = 0; l < spec->dim(); ++l)
      out[l] += monom * coeff.coeff(l).re.convert_to<double>();
  }
  return out;
}

}  // namespace

TEST_CASE("Fueter variables of special points") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  for (int k = 1; k <= 3; ++k) CHECK(zero.zeta(k).is_zero());

  // unit slot k gives the canonical basis direction of H^m
  auto hk = pt(q, {0, 0, 1, 0});
  CHECK(hk.zeta(2) == e(q, 0));
  CHECK(hk.zeta(1).is_zero());
  CHECK(hk.zeta(3).is_zero());

  // v = (1,0,...,0): zeta_k = -e_k
  auto h0 = pt(q, {1, 0, 0, 0});
  for (int k = 1; k <= 3; ++k) CHECK(h0.zeta(k) == -e(q, k));

  CHECK_THROWS_AS(FueterPoint(q, std::vector<FieldScalar>(3)), ShapeError);
}

TEST_CASE("monomial expansion") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);

  VPolynomial z1 = monomial_expand({1, 0, 0}, zero);
  VPolynomial expect = VPolynomial::variable(q, 1) -
                       VPolynomial::variable(q, 0).right_mul(e(q, 1));
  CHECK(z1 == expect);

  CHECK(monomial_expand({0, 0, 0}, zero) ==
        VPolynomial::constant(AlgebraElement::one(q)));

  // zeta_1^2 = v_1^2 - 2 i v_0 v_1 - v_0^2
  VPolynomial sq = monomial_expand({2, 0, 0}, zero);
  VPolynomial want(q);
  want.add_term({0, 2, 0, 0}, e(q, 0));
  want.add_term({1, 1, 0, 0}, e(q, 1) * Rational(-2));
  want.add_term({2, 0, 0, 0}, -e(q, 0));
  CHECK(sq == want);

  CHECK_THROWS_AS(monomial_expand({20, 0, 0}, zero, 16), ShapeError);

  // mixed symmetrized monomial: (zeta)^{(1,1,0)} = (zeta_1 zeta_2 + zeta_2 zeta_1)/2
  // = v_1 v_2 - e_1 v_0 v_2 - e_2 v_0 v_1 + (e_1 e_2 + e_2 e_1)/2 v_0^2,
  // and the quadratic term cancels for anticommuting directions
  VPolynomial mixed = monomial_expand({1, 1, 0}, zero);
  VPolynomial want2(q);
  want2.add_term({0, 1, 1, 0}, e(q, 0));
  want2.add_term({1, 0, 1, 0}, -e(q, 1));
  want2.add_term({1, 1, 0, 0}, -e(q, 2));
  want2.add_term({2, 0, 0, 0}, (e(q, 1) * e(q, 2) + e(q, 2) * e(q, 1)) * Rational(1, 2));
  CHECK(mixed == want2);
  VPolynomial za = monomial_expand({1, 0, 0}, zero);
  VPolynomial zb = monomial_expand({0, 1, 0}, zero);
  CHECK(mixed == (za * zb + zb * za) * Rational(1, 2));
}

TEST_CASE("Cauchy-Fueter operator annihilates Fueter monomials") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  RandomSource rng(31);
  for (const auto& alpha : indices_up_to(3, 3)) {
    CHECK(apply_dirac(monomial_expand(alpha, zero)).is_zero());
    CHECK(apply_dirac(monomial_expand(alpha, rng.point(q))).is_zero());
  }
}

TEST_CASE("pointwise products obstruct through the commutator") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  VPolynomial z1 = monomial_expand({1, 0, 0}, zero);
  VPolynomial z2 = monomial_expand({0, 1, 0}, zero);

  // the variables themselves commute up to [e_1,e_2] v_0^2 = 2k v_0^2
  VPolynomial comm(q);
  comm.add_term({2, 0, 0, 0}, e(q, 3) * Rational(2));
  CHECK(z1 * z2 - z2 * z1 == comm);

  // applying D to the quadratic leaves the linear obstruction [e_1,e_2] v_0
  VPolynomial d = apply_dirac(z1 * z2);
  VPolynomial want(q);
  want.add_term({1, 0, 0, 0}, e(q, 3) * Rational(2));
  CHECK(d == want);
  CHECK(apply_dirac(z1 * z2 + z2 * z1).is_zero());
}

TEST_CASE("series evaluation") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  auto c = e(q, 2) + e(q, 0) * Rational(3, 7);
  auto f = constant_series(zero, c, 4);
  RandomSource rng(37);
  for (int t = 0; t < 5; ++t) CHECK(eval(f, rng.point(q)) == c);

  // zeta_1 at v_0 = 0 is the scalar v_1
  auto z1 = mono(zero, {1, 0, 0}, AlgebraElement::one(q));
  CHECK(eval(z1, pt(q, {0, Rational(5, 3), 1, 2})) ==
        AlgebraElement::scalar(q, FieldScalar(Rational(5, 3))));

  // zeta_1^2 at (1,1,0,0): (1-i)^2 = -2i
  auto z1sq = mono(zero, {2, 0, 0}, AlgebraElement::one(q));
  CHECK(eval(z1sq, pt(q, {1, 1, 0, 0})) == e(q, 1) * Rational(-2));

  // series evaluation agrees with the expanded polynomial everywhere
  auto f2 = rng.series(rng.point(q), 3, 6);
  auto p2 = to_vpoly(f2);
  for (int t = 0; t < 10; ++t) {
    auto v = rng.point(q);
    CHECK(eval(f2, v) == p2.eval(v.v()));
  }
}

TEST_CASE("Cauchy product on monomials and units") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  RandomSource rng(41);

  auto u = rng.element(q), w = rng.element(q);
  auto f = truncate(mono(zero, {1, 1, 0}, u), 5);
  auto g = truncate(mono(zero, {0, 1, 1}, w), 5);
  auto h = cauchy_product(f, g);
  CHECK(h.coeff_at({1, 2, 1}) == u * w);
  CHECK(h.coeff().size() == ((u * w).is_zero() ? 0u : 1u));

  auto one = constant_series(zero, AlgebraElement::one(q), 5);
  auto s = rng.series(zero, 5, 8);
  CHECK(cauchy_product(s, one) == s);
  CHECK(cauchy_product(one, s) == s);

  // zeta_1 k odot zeta_1 i = zeta_1^2 j
  auto p1 = truncate(mono(zero, {1, 0, 0}, e(q, 3)), 2);
  auto p2 = truncate(mono(zero, {1, 0, 0}, e(q, 1)), 2);
  auto prod = cauchy_product(p1, p2);
  CHECK(prod == mono(zero, {2, 0, 0}, e(q, 2)));

  // associativity and center mismatch
  auto a = rng.series(zero, 4, 5), b = rng.series(zero, 4, 5), cc = rng.series(zero, 4, 5);
  CHECK(cauchy_product(cauchy_product(a, b), cc) == cauchy_product(a, cauchy_product(b, cc)));
  auto other = rng.series(rng.point(q), 4, 5);
  CHECK_THROWS_AS(cauchy_product(a, other), SpecMismatchError);
}

TEST_CASE("right-sided product keeps coefficients on the left") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  auto f = mono(zero, {1, 0, 0}, e(q, 3)).with_side(Side::Right);  // k zeta_1
  auto g = mono(zero, {1, 0, 0}, e(q, 1)).with_side(Side::Right);  // i zeta_1
  auto h = cauchy_product_right(truncate(f, 2), truncate(g, 2));
  CHECK(h.side() == Side::Right);
  CHECK(h.coeff_at({2, 0, 0}) == e(q, 3) * e(q, 1));  // ki = j
  // evaluation multiplies the monomial value from the right
  auto v = pt(q, {1, 1, 0, 0});
  CHECK(eval(f, v) == e(q, 3) * (AlgebraElement::one(q) - e(q, 1)));
  CHECK_THROWS_AS(cauchy_product(f, g), ShapeError);
}

TEST_CASE("recentering reproduces the worked example and is exact") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  auto xi = pt(q, {-1, 0, 0, 0});  // zeta_k(xi) = e_k
  for (int k = 1; k <= 3; ++k) CHECK(xi.zeta(k) == e(q, k));

  auto p1 = truncate(mono(zero, {1, 0, 0}, e(q, 3)), 2);  // zeta_1 k
  auto p1x = recenter(p1, xi);
  CHECK(p1x.coeff_at({1, 0, 0}) == e(q, 3));
  CHECK(p1x.coeff_at({0, 0, 0}) == -e(q, 2));  // -j

  RandomSource rng(43);
  auto c = rng.element(q);
  CHECK(recenter(constant_series(zero, c, 3), rng.point(q)).coeff_at({0, 0, 0}) == c);

  for (int t = 0; t < 3; ++t) {
    auto f = rng.series(zero, 3, 6);
    auto xi2 = rng.point(q);
    auto g = recenter(f, xi2);
    CHECK(recenter(g, zero) == f);
    for (int s = 0; s < 20; ++s) {
      auto v = rng.point(q);
      CHECK(eval(f, v) == eval(g, v));
    }
  }
}

TEST_CASE("odot inverse") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  auto one = constant_series(zero, AlgebraElement::one(q), 5);
  CHECK(cauchy_inverse(one) == one);

  // 1 - zeta_1 inverts to the geometric series
  FueterSeries f(zero, 5);
  f.set_coeff({0, 0, 0}, AlgebraElement::one(q));
  f.set_coeff({1, 0, 0}, -AlgebraElement::one(q));
  auto g = cauchy_inverse(f);
  for (int n = 0; n <= 5; ++n) {
    MultiIndex a{n, 0, 0};
    CHECK(g.coeff_at(a) == AlgebraElement::one(q));
  }
  CHECK(cauchy_product(f, g) == one);

  RandomSource rng(47);
  for (int t = 0; t < 5; ++t) {
    FueterSeries h = rng.series(zero, 4, 6);
    h.set_coeff(mi_zero(3), rng.invertible_element(q));
    auto hi = cauchy_inverse(h);
    CHECK(cauchy_product(h, hi) == truncate(one, 4));
    CHECK(cauchy_product(hi, h) == truncate(one, 4));
  }

  auto s = builtin_algebra("split_quaternions");
  FueterSeries bad(FueterPoint::origin(s), 3);
  bad.set_coeff(mi_zero(3), AlgebraElement::one(s) + AlgebraElement::basis(s, 1));
  CHECK_THROWS_AS(cauchy_inverse(bad), NotInvertibleError);
}

TEST_CASE("backward shift: closed form, commutation, quadrature oracle") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  RandomSource rng(53);

  auto c = rng.element(q);
  CHECK(backward_shift(constant_series(zero, c, 3), 1).is_zero());

  // R_1 on zeta_1 zeta_2 c gives zeta_2 c / 2
  auto f = mono(zero, {1, 1, 0}, c);
  auto r = backward_shift(f, 1);
  CHECK(r.coeff_at({0, 1, 0}) == c * Rational(1, 2));
  CHECK(r.coeff().size() == 1);

  for (const auto& alpha : indices_up_to(3, 4)) {
    if (mi_total(alpha) == 0) continue;
    auto za = mono(zero, alpha, AlgebraElement::one(q));
    for (int k = 1; k <= 3; ++k) {
      auto rs = backward_shift(za, k);
      if (alpha[k - 1] == 0) {
        CHECK(rs.is_zero());
      } else {
        MultiIndex down = alpha;
        down[k - 1] -= 1;
        CHECK(rs.coeff_at(down) ==
              AlgebraElement::one(q) * Rational(alpha[k - 1], mi_total(alpha)));
      }
    }
  }

  auto g = rng.series(zero, 4, 8);
  CHECK(backward_shift(backward_shift(g, 1), 2) == backward_shift(backward_shift(g, 2), 1));

  // Gauss-Legendre quadrature of the integral definition, 8 nodes on [0,1]
  const double nodes[8] = {0.01985507175123188, 0.10166676129318664, 0.2372337950418355,
                           0.4082826787521751,  0.5917173212478249,  0.7627662049581645,
                           0.8983332387068134,  0.9801449282487681};
  const double wts[8] = {0.05061426814518813, 0.11119051722668724, 0.15685332293894363,
                         0.18134189168918097, 0.18134189168918097, 0.15685332293894363,
                         0.11119051722668724, 0.05061426814518813};
  auto fser = rng.series(pt(q, {Rational(1, 2), 0, Rational(-1, 3), 1}), 3, 6);
  auto fpoly = to_vpoly(fser);
  for (int k = 1; k <= 3; ++k) {
    VPolynomial dk = fpoly.derivative(k);
    auto v = rng.point(q);
    std::vector<double> vd, wd;
    for (auto& x : v.v()) vd.push_back(x.re.convert_to<double>());
    for (auto& x : fser.center().v()) wd.push_back(x.re.convert_to<double>());
    std::vector<double> integral(q->dim(), 0.0);
    for (int n = 0; n < 8; ++n) {
      std::vector<double> at(q->dim());
      for (int i = 0; i < q->dim(); ++i) at[i] = nodes[n] * vd[i] + (1 - nodes[n]) * wd[i];
      auto val = eval_double(dk, at);
      for (int i = 0; i < q->dim(); ++i) integral[i] += wts[n] * val[i];
    }
    auto exact = eval(backward_shift(fser, k), v);
    for (int i = 0; i < q->dim(); ++i)
      CHECK(std::abs(integral[i] - exact.coeff(i).re.convert_to<double>()) < 1e-10);
  }
}

TEST_CASE("iterated shifts extract Taylor coefficients") {
  auto q = builtin_algebra("quaternions");
  RandomSource rng(59);
  auto xi = rng.point(q);
  auto f = rng.series(xi, 4, 8);
  auto fpoly = to_vpoly(f);
  for (const auto& alpha : indices_up_to(3, 4)) {
    FueterSeries shifted = f;
    for (int k = 1; k <= 3; ++k)
      for (int rpt = 0; rpt < alpha[k - 1]; ++rpt) shifted = backward_shift(shifted, k);
    AlgebraElement lhs = eval(shifted, xi);
    VPolynomial d = fpoly;
    for (int k = 1; k <= 3; ++k)
      for (int rpt = 0; rpt < alpha[k - 1]; ++rpt) d = d.derivative(k);
    // iterated shifts scale by 1/|alpha|!, so alpha!/|alpha|! times the
    // Taylor coefficient (1/alpha!) d^alpha f
    AlgebraElement rhs = d.eval(xi.v()) * Rational(BigInt(1), factorial(mi_total(alpha)));
    CHECK(lhs == rhs);
    // equivalently, the series coefficient is recovered after rescaling
    CHECK(lhs * Rational(factorial(mi_total(alpha)), mi_factorial(alpha)) ==
          f.coeff_at(alpha));
  }
}

TEST_CASE("Gleason solutions have exactly zero residual") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  RandomSource rng(61);

  auto c = rng.element(q);
  auto cser = constant_series(zero, c, 3);
  auto gs = gleason_solve(cser);
  for (auto& g : gs) CHECK(g.is_zero());
  CHECK(gleason_residual(cser, gs).is_zero());

  // monomial: sum_k zeta_k odot g_k reassembles zeta^alpha
  for (const auto& alpha : indices_up_to(3, 3)) {
    if (mi_total(alpha) == 0) continue;
    auto f = mono(zero, alpha, AlgebraElement::one(q));
    auto g = gleason_solve(f);
    FueterSeries sum(zero, f.order());
    for (int k = 1; k <= 3; ++k)
      sum += truncate(
          cauchy_product(truncate(var_minus_center(zero, k, f.order()), f.order()),
                         truncate(g[k - 1], f.order())),
          f.order());
    CHECK(sum == f);
  }

  for (int t = 0; t < 10; ++t) {
    auto xi = rng.point(q);
    auto f = rng.series(xi, 3, 8);
    CHECK(gleason_residual(f, gleason_solve(f)).is_zero());
  }
}

TEST_CASE("Frechet probe: exact linear, quadratic decay, witness failure") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  std::vector<Rational> scales{Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
  RandomSource rng(67);
  std::vector<std::vector<FieldScalar>> dirs;
  for (int d = 0; d < 3; ++d) {
    std::vector<FieldScalar> u(q->dim());
    u[0] = FieldScalar(rng.nonzero_rational());
    for (int i = 1; i <= 3; ++i) u[i] = FieldScalar(rng.rational());
    dirs.push_back(std::move(u));
  }

  auto lin = frechet_check(monomial_expand({1, 0, 0}, zero), rng.point(q), scales, dirs);
  CHECK(lin.exact_zero);
  CHECK(lin.hyperholomorphic);

  auto quad = frechet_check(monomial_expand({2, 0, 0}, zero), rng.point(q), scales, dirs);
  CHECK(quad.hyperholomorphic);
  CHECK(quad.min_slope > 0.9);

  auto witness = frechet_check(
      monomial_expand({1, 0, 0}, zero) * monomial_expand({0, 1, 0}, zero),
      pt(q, {1, Rational(1, 2), Rational(-1, 3), Rational(2, 5)}), scales, dirs);
  CHECK_FALSE(witness.hyperholomorphic);
  CHECK(witness.min_slope < 0.5);
}

TEST_CASE("Hermitian form on H^m") {
  auto q = builtin_algebra("quaternions");
  RandomSource rng(71);
  auto z = rng.point(q);
  for (int k = 1; k <= 3; ++k) {
    auto hk_v = std::vector<Rational>{0, 0, 0, 0};
    hk_v[k] = 1;
    CHECK(hermitian_form_Am(z, pt(q, hk_v)) == z.zeta(k));
  }
  CHECK(hermitian_form_Am(FueterPoint::origin(q), z).is_zero());

  // [zeta, h_0] = sum_k (-e_k)^dag zeta_k = v_0 sum e_k^dag e_k - sum v_k e_k^dag;
  // for the quaternions this is 3 v_0 + sum v_k e_k
  auto h0 = pt(q, {1, 0, 0, 0});
  AlgebraElement want = AlgebraElement::zero(q);
  for (int k = 1; k <= 3; ++k) {
    want += e(q, k).involute() * e(q, k) * z.v()[0];
    want -= e(q, k).involute() * z.v()[k];
  }
  CHECK(hermitian_form_Am(z, h0) == want);
  AlgebraElement quat_value =
      AlgebraElement::scalar(q, z.v()[0]) * Rational(3) +
      (e(q, 1) * z.v()[1] + e(q, 2) * z.v()[2] + e(q, 3) * z.v()[3]);
  CHECK(hermitian_form_Am(z, h0) == quat_value);

  double n = norm_Am(z);
  double acc = 0;
  for (int k = 1; k <= 3; ++k) acc += z.zeta(k).norm() * z.zeta(k).norm();
  CHECK(n == doctest::Approx(std::sqrt(acc)));
}

TEST_CASE("tail diagnostic") {
  auto q = builtin_algebra("quaternions");
  auto zero = FueterPoint::origin(q);
  auto c = constant_series(zero, AlgebraElement::one(q), 4);
  CHECK(tail_bound(c, {0.5, 0.5, 0.5}, 1) == 0.0);
  CHECK(tail_bound(c, {0.0, 0.0, 0.0}, 1) == 0.0);

  FueterSeries geo(zero, 8);
  for (int n = 0; n <= 8; ++n) geo.set_coeff({n, 0, 0}, AlgebraElement::one(q));
  for (int from = 1; from <= 8; ++from) {
    double t = tail_bound(geo, {0.5, 0.7, 0.9}, from);
    CHECK(t <= 2 * std::pow(0.5, from) + 1e-12);
    CHECK(t > 0);
  }
  CHECK_THROWS_AS(tail_bound(geo, {0.5}, 1), ShapeError);
}

TEST_CASE("monomial hyperholomorphy across all builtins at modest order") {
  for (const char* name : {"split_quaternions", "grassmann:2", "ternary"}) {
    auto spec = builtin_algebra(name);
    RandomSource rng(73);
    auto xi = rng.point(spec);
    for (const auto& alpha : indices_up_to(spec->m(), 2))
      CHECK(apply_dirac(monomial_expand(alpha, xi)).is_zero());
  }
}
