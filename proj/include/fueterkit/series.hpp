#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fueterkit/matrix.hpp"
#include "fueterkit/multi_index.hpp"
#include "fueterkit/sym_product.hpp"
#include "fueterkit/vpoly.hpp"

namespace fueterkit {

/// Point of K^{m+1} together with its Fueter variables
/// zeta_k(v) = v_k - e_k v_0.
class FueterPoint {
 public:
  FueterPoint() = default;
  FueterPoint(AlgebraPtr spec, std::vector<FieldScalar> v);

  static FueterPoint origin(const AlgebraPtr& spec);

  const AlgebraPtr& spec() const { return spec_; }
  const std::vector<FieldScalar>& v() const { return v_; }
  bool is_origin() const;

  /// zeta_k for 1 <= k <= m.
  AlgebraElement zeta(int k) const;
  std::vector<AlgebraElement> zetas() const;

  friend bool operator==(const FueterPoint& a, const FueterPoint& b) {
    require_same_spec(a.spec_, b.spec_);
    return a.v_ == b.v_;
  }

 private:
  AlgebraPtr spec_;
  std::vector<FieldScalar> v_;
};

/// Hermitian form [zeta,xi]_A = sum_k xi_k^dag zeta_k on A^m.
AlgebraElement hermitian_form_Am(const FueterPoint& zeta, const FueterPoint& xi);

/// ||zeta||_{A^m} = (sum_k N(zeta_k)^2)^(1/2).
double norm_Am(const FueterPoint& zeta);

enum class Side { Left, Right };

template <class Coeff>
struct coeff_traits;

template <>
struct coeff_traits<AlgebraElement> {
  static AlgebraElement zero(const AlgebraPtr& s, int, int) { return AlgebraElement::zero(s); }
  static bool is_zero(const AlgebraElement& a) { return a.is_zero(); }
  static void check_shape(const AlgebraElement&, int, int) {}
  static AlgebraElement lmul(const AlgebraElement& v, const AlgebraElement& a) { return v * a; }
  static AlgebraElement rmul(const AlgebraElement& a, const AlgebraElement& v) { return a * v; }
  static AlgebraElement invert(const AlgebraElement& a) { return a.inverse(); }
  static AlgebraElement identity(const AlgebraPtr& s, int) { return AlgebraElement::one(s); }
  static double norm(const AlgebraElement& a) { return a.norm(); }
};

template <>
struct coeff_traits<MatrixOverA> {
  static MatrixOverA zero(const AlgebraPtr& s, int r, int c) {
    return MatrixOverA::zero(s, r, c);
  }
  static bool is_zero(const MatrixOverA& a) { return a.is_zero(); }
  static void check_shape(const MatrixOverA& a, int r, int c) {
    if (a.rows() != r || a.cols() != c) throw ShapeError("series coefficient shape mismatch");
  }
  static MatrixOverA lmul(const AlgebraElement& v, const MatrixOverA& a) { return a.left_mul(v); }
  static MatrixOverA rmul(const MatrixOverA& a, const AlgebraElement& v) {
    return a.right_mul(v);
  }
  static MatrixOverA invert(const MatrixOverA& a) { return mat_invert(a); }
  static MatrixOverA identity(const AlgebraPtr& s, int n) { return MatrixOverA::identity(s, n); }
  static double norm(const MatrixOverA& a) { return block_norm(a); }
};

/// Truncated left Fueter series sum_{|alpha| <= order} (zeta-xi)^alpha f_alpha
/// with symmetrized monomials; coefficients sit right of the monomials for
/// Side::Left and left of them for Side::Right.
template <class Coeff>
class Series {
 public:
  using Traits = coeff_traits<Coeff>;

  Series() = default;
  Series(FueterPoint center, int order, int rows = 1, int cols = 1, Side side = Side::Left)
      : center_(std::move(center)), order_(order), rows_(rows), cols_(cols), side_(side) {
    if (order < 0) throw ShapeError("series order must be nonnegative");
  }

  const FueterPoint& center() const { return center_; }
  const AlgebraPtr& spec() const { return center_.spec(); }
  int order() const { return order_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Side side() const { return side_; }
  const std::map<MultiIndex, Coeff>& coeff() const { return c_; }

  Coeff coeff_at(const MultiIndex& a) const {
    auto it = c_.find(a);
    return it == c_.end() ? Traits::zero(spec(), rows_, cols_) : it->second;
  }

  void set_coeff(const MultiIndex& a, const Coeff& v) {
    if (static_cast<int>(a.size()) != spec()->m()) throw ShapeError("multi-index length mismatch");
    if (mi_total(a) > order_) throw ShapeError("multi-index beyond truncation order");
    Traits::check_shape(v, rows_, cols_);
    if (Traits::is_zero(v))
      c_.erase(a);
    else
      c_[a] = v;
  }

  void add_coeff(const MultiIndex& a, const Coeff& v) {
    auto it = c_.find(a);
    if (it == c_.end())
      set_coeff(a, v);
    else {
      it->second += v;
      if (Traits::is_zero(it->second)) c_.erase(it);
    }
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const {
    int d = 0;
    for (auto& [a, v] : c_) d = std::max(d, mi_total(a));
    return d;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& [a, v] : r.c_) v = -v;
    return r;
  }
  Series& operator+=(const Series& o) {
    require_compatible(o);
    for (auto& [a, v] : o.c_)
      if (mi_total(a) <= order_) add_coeff(a, v);
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_compatible(o);
    for (auto& [a, v] : o.c_)
      if (mi_total(a) <= order_) add_coeff(a, -v);
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Rational& k) {
    Series r = a;
    if (k == 0) {
      r.c_.clear();
      return r;
    }
    for (auto& [mi, v] : r.c_) v = v * k;
    return r;
  }
  friend Series operator*(const Rational& k, const Series& a) { return a * k; }
  friend bool operator==(const Series& a, const Series& b) {
    require_same_spec(a.spec(), b.spec());
    if (!(a.center_ == b.center_)) return false;
    if (a.c_.size() != b.c_.size()) return false;
    auto ia = a.c_.begin();
    auto ib = b.c_.begin();
    for (; ia != a.c_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

  /// Reinterprets the coefficient side without touching coefficients.
  Series with_side(Side s) const {
    Series r = *this;
    r.side_ = s;
    return r;
  }

 private:
  void require_compatible(const Series& o) const {
    if (!(center_ == o.center_)) throw SpecMismatchError("series centers differ");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("series shapes differ");
    if (side_ != o.side_) throw ShapeError("series sides differ");
  }

  FueterPoint center_;
  int order_ = 0;
  int rows_ = 1, cols_ = 1;
  Side side_ = Side::Left;
  std::map<MultiIndex, Coeff> c_;
};

using FueterSeries = Series<AlgebraElement>;
using MatrixSeries = Series<MatrixOverA>;

/// Constant series of the given order.
template <class Coeff>
Series<Coeff> constant_series(const FueterPoint& center, const Coeff& value, int order,
                              Side side = Side::Left);
FueterSeries constant_series(const FueterPoint& center, const AlgebraElement& value, int order);

/// The function zeta_k - xi_k as a series centered at xi: one unit
/// coefficient at iota_k.
FueterSeries var_minus_center(const FueterPoint& center, int k, int order);

/// The function zeta_k centered at xi: constant xi_k plus iota_k term.
FueterSeries var_series(const FueterPoint& center, int k, int order);

namespace kernels {

/// Cauchy convolution h_alpha = sum_{gamma <= alpha} f_{alpha-gamma} g_gamma
/// over the index pairs of two coefficient maps. Serial reference.
template <class Coeff>
std::map<MultiIndex, Coeff> convolve_serial(const std::map<MultiIndex, Coeff>& f,
                                            const std::map<MultiIndex, Coeff>& g, int order);

/// OpenMP variant of convolve_serial, parallel over output indices;
/// exact arithmetic makes the result bit-identical to the reference.
template <class Coeff>
std::map<MultiIndex, Coeff> convolve_parallel(const std::map<MultiIndex, Coeff>& f,
                                              const std::map<MultiIndex, Coeff>& g, int order);

}  // namespace kernels

template <class Coeff>
Series<Coeff> cauchy_product(const Series<Coeff>& f, const Series<Coeff>& g,
                             kernels::Exec how = kernels::default_exec());

template <class Coeff>
Series<Coeff> cauchy_product_right(const Series<Coeff>& f, const Series<Coeff>& g,
                                   kernels::Exec how = kernels::default_exec());

/// odot-inverse: g_0 = f_0^{-1}, g_alpha = -f_0^{-1} sum_{0<gamma<=alpha}
/// f_gamma g_{alpha-gamma}.
template <class Coeff>
Series<Coeff> cauchy_inverse(const Series<Coeff>& f);

/// Backward shift R_k at the series center: coefficient at beta becomes
/// ((beta_k+1)/(|beta|+1)) f_{beta+iota_k}; the order drops by one.
template <class Coeff>
Series<Coeff> backward_shift(const Series<Coeff>& f, int k);

template <class Coeff>
Series<Coeff> truncate(const Series<Coeff>& f, int order);

/// Values sym(d^alpha) for all |alpha| <= degree from the displacement
/// tuple d, by the degree-recursive symmetrized-power rule.
std::map<MultiIndex, AlgebraElement> sym_monomial_values(
    const std::vector<AlgebraElement>& displacement, int degree);

/// sym((zeta(v)-xi)^alpha) for all |alpha| <= degree.
std::map<MultiIndex, AlgebraElement> sym_monomial_values(const FueterPoint& center,
                                                         const FueterPoint& at, int degree);

template <class Coeff>
Coeff eval(const Series<Coeff>& f, const FueterPoint& at);

/// Evaluation at a zeta-tuple of algebra elements; tuples beyond the image
/// of K^{m+1} (mixed directions) are allowed wherever only the series
/// arithmetic matters.
template <class Coeff>
Coeff eval(const Series<Coeff>& f, const std::vector<AlgebraElement>& zetas);

/// Exact expansion of the symmetrized monomial (zeta-xi)^alpha into
/// v-monomials.
VPolynomial monomial_expand(const MultiIndex& alpha, const FueterPoint& center,
                            int degree_cap = 16);

VPolynomial to_vpoly(const FueterSeries& f);

/// Rewrites a polynomial series around a new center with identical
/// evaluation everywhere (exact).
FueterSeries recenter(const FueterSeries& f, const FueterPoint& new_center);

/// Gleason solution g_k = R_k(xi) f.
std::vector<FueterSeries> gleason_solve(const FueterSeries& f);

/// f - f(xi) - sum_k (zeta_k - xi_k) odot g_k, as a series (zero iff the
/// g_k solve Gleason's problem through order).
FueterSeries gleason_residual(const FueterSeries& f, const std::vector<FueterSeries>& g);

/// sum_{from_order <= |alpha| <= order} sigma^alpha N(f_alpha).
template <class Coeff>
double tail_bound(const Series<Coeff>& f, const std::vector<double>& sigma, int from_order);

struct FrechetReport {
  std::vector<Rational> scales;
  /// residual ratio per direction per scale; ratios[d][s]
  std::vector<std::vector<double>> ratios;
  /// least-squares log-log slope per direction (infinity when the residual
  /// vanishes identically)
  std::vector<double> slopes;
  double min_slope = 0;
  bool exact_zero = false;
  bool hyperholomorphic = false;
};

/// Probes the Frechet-derivative definition of hyperholomorphicity with the
/// exact candidate A_k = df/dv_k(xi) and random rational directions.
FrechetReport frechet_check(const VPolynomial& f, const FueterPoint& xi,
                            const std::vector<Rational>& scales,
                            const std::vector<std::vector<FieldScalar>>& directions,
                            double slope_threshold = 0.9);

// --- template definitions -------------------------------------------------

template <class Coeff>
Series<Coeff> constant_series(const FueterPoint& center, const Coeff& value, int order,
                              Side side) {
  int r = 1, c = 1;
  if constexpr (std::is_same_v<Coeff, MatrixOverA>) {
    r = value.rows();
    c = value.cols();
  }
  Series<Coeff> s(center, order, r, c, side);
  s.set_coeff(mi_zero(center.spec()->m()), value);
  return s;
}

namespace kernels {

template <class Coeff>
std::map<MultiIndex, Coeff> convolve_serial(const std::map<MultiIndex, Coeff>& f,
                                            const std::map<MultiIndex, Coeff>& g, int order) {
  std::map<MultiIndex, Coeff> out;
  for (auto& [fa, fv] : f)
    for (auto& [ga, gv] : g) {
      if (mi_total(fa) + mi_total(ga) > order) continue;
      MultiIndex sum = mi_add(fa, ga);
      Coeff term = fv * gv;
      auto it = out.find(sum);
      if (it == out.end())
        out.emplace(std::move(sum), std::move(term));
      else
        it->second += term;
    }
  for (auto it = out.begin(); it != out.end();)
    it = coeff_traits<Coeff>::is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

template <class Coeff>
std::map<MultiIndex, Coeff> convolve_parallel(const std::map<MultiIndex, Coeff>& f,
                                              const std::map<MultiIndex, Coeff>& g, int order) {
  std::vector<const Coeff*> fv, gv;
  std::vector<const MultiIndex*> fa, ga;
  for (auto& [a, v] : f) {
    fa.push_back(&a);
    fv.push_back(&v);
  }
  for (auto& [a, v] : g) {
    ga.push_back(&a);
    gv.push_back(&v);
  }
  std::map<MultiIndex, std::vector<std::pair<int, int>>> plan;
  for (size_t i = 0; i < fa.size(); ++i)
    for (size_t j = 0; j < ga.size(); ++j) {
      if (mi_total(*fa[i]) + mi_total(*ga[j]) > order) continue;
      plan[mi_add(*fa[i], *ga[j])].emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  std::vector<const std::vector<std::pair<int, int>>*> jobs;
  std::vector<const MultiIndex*> outs;
  for (auto& [a, pairs] : plan) {
    outs.push_back(&a);
    jobs.push_back(&pairs);
  }
  std::vector<std::optional<Coeff>> results(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(jobs.size()); ++idx) {
    const auto& pairs = *jobs[idx];
    Coeff acc = *fv[pairs[0].first] * *gv[pairs[0].second];
    for (size_t t = 1; t < pairs.size(); ++t) acc += *fv[pairs[t].first] * *gv[pairs[t].second];
    results[idx] = std::move(acc);
  }
  std::map<MultiIndex, Coeff> out;
  for (size_t i = 0; i < jobs.size(); ++i)
    if (!coeff_traits<Coeff>::is_zero(*results[i])) out.emplace(*outs[i], std::move(*results[i]));
  return out;
}

}  // namespace kernels

template <class Coeff>
Series<Coeff> cauchy_product(const Series<Coeff>& f, const Series<Coeff>& g, kernels::Exec how) {
  if (!(f.center() == g.center()))
    throw SpecMismatchError("Cauchy product requires a common center");
  if (f.side() != Side::Left || g.side() != Side::Left)
    throw ShapeError("cauchy_product acts on left series; use cauchy_product_right");
  int order = std::min(f.order(), g.order());
  int rows = f.rows(), cols = g.cols();
  if constexpr (std::is_same_v<Coeff, MatrixOverA>) {
    if (f.cols() != g.rows()) throw ShapeError("series coefficient shapes incompatible");
  }
  Series<Coeff> h(f.center(), order, rows, cols, Side::Left);
  auto m = how == kernels::Exec::Parallel
               ? kernels::convolve_parallel<Coeff>(f.coeff(), g.coeff(), order)
               : kernels::convolve_serial<Coeff>(f.coeff(), g.coeff(), order);
  for (auto& [a, v] : m) h.set_coeff(a, v);
  return h;
}

template <class Coeff>
Series<Coeff> cauchy_product_right(const Series<Coeff>& f, const Series<Coeff>& g,
                                   kernels::Exec how) {
  if (f.side() != Side::Right || g.side() != Side::Right)
    throw ShapeError("cauchy_product_right acts on right series");
  auto h = cauchy_product(f.with_side(Side::Left), g.with_side(Side::Left), how);
  return h.with_side(Side::Right);
}

template <class Coeff>
Series<Coeff> cauchy_inverse(const Series<Coeff>& f) {
  if (f.side() != Side::Left) throw ShapeError("cauchy_inverse acts on left series");
  if (f.rows() != f.cols()) throw ShapeError("cauchy_inverse needs square coefficients");
  const int m = f.spec()->m();
  Coeff f0inv = coeff_traits<Coeff>::invert(f.coeff_at(mi_zero(m)));
  Series<Coeff> g(f.center(), f.order(), f.rows(), f.cols(), Side::Left);
  g.set_coeff(mi_zero(m), f0inv);
  for (int d = 1; d <= f.order(); ++d)
    for (const auto& alpha : indices_of_degree(m, d)) {
      bool any = false;
      Coeff acc;
      for (auto& [gamma, fg] : f.coeff()) {
        if (mi_total(gamma) == 0 || !mi_leq(gamma, alpha)) continue;
        auto it = g.coeff().find(mi_sub(alpha, gamma));
        if (it == g.coeff().end()) continue;
        if (any)
          acc += fg * it->second;
        else {
          acc = fg * it->second;
          any = true;
        }
      }
      if (any && !coeff_traits<Coeff>::is_zero(acc)) g.set_coeff(alpha, -(f0inv * acc));
    }
  return g;
}

template <class Coeff>
Series<Coeff> backward_shift(const Series<Coeff>& f, int k) {
  if (k < 1 || k > f.spec()->m()) throw ShapeError("shift direction out of range");
  Series<Coeff> r(f.center(), std::max(f.order() - 1, 0), f.rows(), f.cols(), f.side());
  for (auto& [alpha, v] : f.coeff()) {
    if (alpha[k - 1] == 0) continue;
    MultiIndex beta = alpha;
    beta[k - 1] -= 1;
    r.set_coeff(beta, v * Rational(alpha[k - 1], mi_total(alpha)));
  }
  return r;
}

template <class Coeff>
Series<Coeff> truncate(const Series<Coeff>& f, int order) {
  Series<Coeff> r(f.center(), order, f.rows(), f.cols(), f.side());
  for (auto& [a, v] : f.coeff())
    if (mi_total(a) <= order) r.set_coeff(a, v);
  return r;
}

template <class Coeff>
Coeff eval(const Series<Coeff>& f, const FueterPoint& at) {
  auto mono = sym_monomial_values(f.center(), at, f.order());
  Coeff acc = coeff_traits<Coeff>::zero(f.spec(), f.rows(), f.cols());
  for (auto& [a, v] : f.coeff()) {
    const AlgebraElement& s = mono.at(a);
    acc += f.side() == Side::Left ? coeff_traits<Coeff>::lmul(s, v)
                                  : coeff_traits<Coeff>::rmul(v, s);
  }
  return acc;
}

template <class Coeff>
Coeff eval(const Series<Coeff>& f, const std::vector<AlgebraElement>& zetas) {
  if (static_cast<int>(zetas.size()) != f.spec()->m())
    throw ShapeError("zeta tuple needs m components");
  std::vector<AlgebraElement> d;
  for (int k = 1; k <= f.spec()->m(); ++k) d.push_back(zetas[k - 1] - f.center().zeta(k));
  auto mono = sym_monomial_values(d, f.order());
  Coeff acc = coeff_traits<Coeff>::zero(f.spec(), f.rows(), f.cols());
  for (auto& [a, v] : f.coeff()) {
    const AlgebraElement& s = mono.at(a);
    acc += f.side() == Side::Left ? coeff_traits<Coeff>::lmul(s, v)
                                  : coeff_traits<Coeff>::rmul(v, s);
  }
  return acc;
}

template <class Coeff>
double tail_bound(const Series<Coeff>& f, const std::vector<double>& sigma, int from_order) {
  if (static_cast<int>(sigma.size()) != f.spec()->m())
    throw ShapeError("sigma length must equal m");
  if (from_order > f.order()) throw ShapeError("from_order beyond truncation order");
  double total = 0;
  for (auto& [a, v] : f.coeff()) {
    if (mi_total(a) < from_order) continue;
    double w = 1;
    for (size_t i = 0; i < sigma.size(); ++i)
      for (int r = 0; r < a[i]; ++r) w *= sigma[i];
    total += w * coeff_traits<Coeff>::norm(v);
  }
  return total;
}

}  // namespace fueterkit
