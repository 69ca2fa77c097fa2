#include "fueterkit/series.hpp"

#include <cmath>

namespace fueterkit {

FueterPoint::FueterPoint(AlgebraPtr spec, std::vector<FieldScalar> v)
    : spec_(std::move(spec)), v_(std::move(v)) {
  if (static_cast<int>(v_.size()) != spec_->dim())
    throw ShapeError("point must have m+1 coordinates");
  if (spec_->field() == Field::Real)
    for (auto& x : v_)
      if (!x.is_real()) throw ShapeError("complex coordinate over a real algebra");
}

FueterPoint FueterPoint::origin(const AlgebraPtr& spec) {
  return {spec, std::vector<FieldScalar>(spec->dim())};
}

bool FueterPoint::is_origin() const {
  for (auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

AlgebraElement FueterPoint::zeta(int k) const {
  if (k < 1 || k > spec_->m()) throw ShapeError("zeta index out of range");
  std::vector<FieldScalar> c(spec_->dim());
  c[0] = v_[k];
  c[k] -= v_[0];
  return {spec_, std::move(c)};
}

std::vector<AlgebraElement> FueterPoint::zetas() const {
  std::vector<AlgebraElement> out;
  for (int k = 1; k <= spec_->m(); ++k) out.push_back(zeta(k));
  return out;
}

AlgebraElement hermitian_form_Am(const FueterPoint& zeta, const FueterPoint& xi) {
  require_same_spec(zeta.spec(), xi.spec());
  AlgebraElement acc = AlgebraElement::zero(zeta.spec());
  for (int k = 1; k <= zeta.spec()->m(); ++k) acc += xi.zeta(k).involute() * zeta.zeta(k);
  return acc;
}

double norm_Am(const FueterPoint& zeta) {
  double s = 0;
  for (int k = 1; k <= zeta.spec()->m(); ++k) {
    double n = zeta.zeta(k).norm();
    s += n * n;
  }
  return std::sqrt(s);
}

FueterSeries constant_series(const FueterPoint& center, const AlgebraElement& value, int order) {
  return constant_series<AlgebraElement>(center, value, order, Side::Left);
}

FueterSeries var_minus_center(const FueterPoint& center, int k, int order) {
  FueterSeries s(center, order);
  s.set_coeff(mi_unit(center.spec()->m(), k), AlgebraElement::one(center.spec()));
  return s;
}

FueterSeries var_series(const FueterPoint& center, int k, int order) {
  FueterSeries s = var_minus_center(center, k, order);
  AlgebraElement xk = center.zeta(k);
  if (!xk.is_zero()) s.set_coeff(mi_zero(center.spec()->m()), xk);
  return s;
}

std::map<MultiIndex, AlgebraElement> sym_monomial_values(
    const std::vector<AlgebraElement>& displacement, int degree) {
  if (displacement.empty()) throw ShapeError("empty displacement tuple");
  const AlgebraPtr& spec = displacement[0].spec();
  const int m = static_cast<int>(displacement.size());
  std::map<MultiIndex, AlgebraElement> out;
  out[mi_zero(m)] = AlgebraElement::one(spec);
  for (int deg = 1; deg <= degree; ++deg)
    for (const auto& alpha : indices_of_degree(m, deg)) {
      AlgebraElement acc = AlgebraElement::zero(spec);
      for (int k = 1; k <= m; ++k) {
        if (alpha[k - 1] == 0) continue;
        MultiIndex prev = alpha;
        prev[k - 1] -= 1;
        acc += Rational(alpha[k - 1]) * (out.at(prev) * displacement[k - 1]);
      }
      out[alpha] = acc * Rational(1, deg);
    }
  return out;
}

std::map<MultiIndex, AlgebraElement> sym_monomial_values(const FueterPoint& center,
                                                         const FueterPoint& at, int degree) {
  require_same_spec(center.spec(), at.spec());
  const int m = center.spec()->m();
  std::vector<AlgebraElement> d;
  for (int k = 1; k <= m; ++k) d.push_back(at.zeta(k) - center.zeta(k));
  return sym_monomial_values(d, degree);
}

VPolynomial monomial_expand(const MultiIndex& alpha, const FueterPoint& center, int degree_cap) {
  const AlgebraPtr& spec = center.spec();
  const int m = spec->m();
  if (static_cast<int>(alpha.size()) != m) throw ShapeError("multi-index length mismatch");
  if (mi_total(alpha) > degree_cap) throw ShapeError("monomial degree exceeds configured cap");
  if (mi_total(alpha) == 0) return VPolynomial::constant(AlgebraElement::one(spec));
  std::vector<std::pair<VPolynomial, int>> factors;
  for (int k = 1; k <= m; ++k) {
    if (alpha[k - 1] == 0) continue;
    // zeta_k - xi_k = v_k - e_k v_0 - xi_k
    VPolynomial f = VPolynomial::variable(spec, k);
    f -= VPolynomial::variable(spec, 0).right_mul(AlgebraElement::basis(spec, k));
    f -= VPolynomial::constant(center.zeta(k));
    factors.emplace_back(std::move(f), alpha[k - 1]);
  }
  return sym_power(factors);
}

VPolynomial to_vpoly(const FueterSeries& f) {
  if (f.side() != Side::Left) throw ShapeError("to_vpoly expects a left series");
  VPolynomial out = VPolynomial::zero(f.spec());
  for (auto& [alpha, c] : f.coeff())
    out += monomial_expand(alpha, f.center(), f.order()).right_mul(c);
  return out;
}

FueterSeries recenter(const FueterSeries& f, const FueterPoint& new_center) {
  require_same_spec(f.spec(), new_center.spec());
  const int m = f.spec()->m();
  VPolynomial expanded = to_vpoly(f);
  FueterSeries out(new_center, f.order());
  // f_beta(w') = (1/beta!) d^beta f / dv^beta (w'), derivatives in v_1..v_m
  std::map<MultiIndex, VPolynomial> derivs;
  derivs[mi_zero(m)] = expanded;
  for (int d = 0; d <= f.order(); ++d)
    for (const auto& beta : indices_of_degree(m, d)) {
      if (d > 0) {
        int k = 0;
        while (beta[k] == 0) ++k;
        MultiIndex prev = beta;
        prev[k] -= 1;
        derivs[beta] = derivs.at(prev).derivative(k + 1);
      }
      AlgebraElement val = derivs.at(beta).eval(new_center.v());
      out.set_coeff(beta, val * Rational(BigInt(1), mi_factorial(beta)));
    }
  return out;
}

std::vector<FueterSeries> gleason_solve(const FueterSeries& f) {
  std::vector<FueterSeries> g;
  for (int k = 1; k <= f.spec()->m(); ++k) g.push_back(backward_shift(f, k));
  return g;
}

FueterSeries gleason_residual(const FueterSeries& f, const std::vector<FueterSeries>& g) {
  if (static_cast<int>(g.size()) != f.spec()->m())
    throw ShapeError("expected one solution component per variable");
  FueterSeries res = f;
  res.add_coeff(mi_zero(f.spec()->m()), -f.coeff_at(mi_zero(f.spec()->m())));
  for (int k = 1; k <= f.spec()->m(); ++k) {
    auto term = cauchy_product(truncate(var_minus_center(f.center(), k, f.order()), f.order()),
                               truncate(g[k - 1], f.order()));
    res -= truncate(term, f.order());
  }
  return res;
}

FrechetReport frechet_check(const VPolynomial& f, const FueterPoint& xi,
                            const std::vector<Rational>& scales,
                            const std::vector<std::vector<FieldScalar>>& directions,
                            double slope_threshold) {
  const AlgebraPtr& spec = f.spec();
  const int m = spec->m();
  FrechetReport rep;
  rep.scales = scales;

  AlgebraElement f_xi = f.eval(xi.v());
  std::vector<AlgebraElement> partials;  // A_k = df/dv_k(xi), k = 1..m
  for (int k = 1; k <= m; ++k) partials.push_back(f.derivative(k).eval(xi.v()));

  bool all_zero = true;
  for (const auto& u : directions) {
    FueterPoint du(spec, u);
    double dnorm = norm_Am(du);
    std::vector<double> row;
    for (const Rational& s : scales) {
      std::vector<FieldScalar> shifted = xi.v();
      for (int i = 0; i <= m; ++i) shifted[i] += FieldScalar(s) * u[i];
      AlgebraElement fv = f.eval(shifted);
      AlgebraElement lin = AlgebraElement::zero(spec);
      for (int k = 1; k <= m; ++k)
        lin += (FieldScalar(s) * FueterPoint(spec, u).zeta(k)) * partials[k - 1];
      AlgebraElement resid = fv - f_xi - lin;
      double ratio = resid.norm() / (s.convert_to<double>() * dnorm);
      row.push_back(ratio);
      if (ratio > 1e-14) all_zero = false;
    }
    rep.ratios.push_back(row);

    // least-squares slope of log(ratio) against log(scale)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < scales.size(); ++i) {
      if (row[i] <= 0) continue;
      double x = std::log(scales[i].convert_to<double>());
      double y = std::log(row[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    double slope = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx)
                          : std::numeric_limits<double>::infinity();
    rep.slopes.push_back(slope);
  }
  rep.exact_zero = all_zero;
  rep.min_slope = std::numeric_limits<double>::infinity();
  for (double s : rep.slopes) rep.min_slope = std::min(rep.min_slope, s);
  rep.hyperholomorphic = all_zero || rep.min_slope >= slope_threshold;
  return rep;
}

}  // namespace fueterkit
