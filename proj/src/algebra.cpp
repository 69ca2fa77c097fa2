#include "fueterkit/algebra.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <bit>
#include <cmath>
#include <random>
#include <sstream>

namespace fueterkit {

AlgebraSpec::AlgebraSpec(Field field, std::vector<std::string> basis,
                         std::vector<std::vector<std::vector<FieldScalar>>> chi,
                         std::vector<std::vector<FieldScalar>> involution, NormPolicy policy,
                         std::string name)
    : field_(field),
      dim_(static_cast<int>(basis.size())),
      name_(std::move(name)),
      basis_(std::move(basis)),
      chi_(std::move(chi)),
      invol_(std::move(involution)),
      policy_(policy) {
  if (dim_ <= 0) throw ShapeError("algebra dimension must be positive");
  if (static_cast<int>(chi_.size()) != dim_)
    throw ShapeError("chi tensor must have dim matrices");
  for (auto& mat : chi_) {
    if (static_cast<int>(mat.size()) != dim_) throw ShapeError("chi matrix row count mismatch");
    for (auto& row : mat)
      if (static_cast<int>(row.size()) != dim_) throw ShapeError("chi matrix column mismatch");
  }
  if (static_cast<int>(invol_.size()) != dim_) throw ShapeError("involution matrix mismatch");
  for (auto& row : invol_)
    if (static_cast<int>(row.size()) != dim_) throw ShapeError("involution matrix mismatch");

  table_.assign(dim_, std::vector<std::vector<ProdTerm>>(dim_));
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k)
      for (int l = 0; l < dim_; ++l)
        if (!chi_[l][j][k].is_zero()) {
          const FieldScalar& c = chi_[l][j][k];
          int sign = 0;
          if (c.im.is_zero()) {
            if (c.re == 1) sign = 1;
            if (c.re == -1) sign = -1;
          }
          table_[j][k].push_back({l, c, sign});
        }
}

AlgebraElement::AlgebraElement(AlgebraPtr spec, std::vector<FieldScalar> coeff)
    : spec_(std::move(spec)), c_(std::move(coeff)) {
  if (static_cast<int>(c_.size()) != spec_->dim())
    throw ShapeError("coefficient vector length must equal algebra dimension");
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& spec) {
  return {spec, std::vector<FieldScalar>(spec->dim())};
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& spec) { return basis(spec, 0); }

AlgebraElement AlgebraElement::basis(const AlgebraPtr& spec, int k) {
  std::vector<FieldScalar> c(spec->dim());
  c.at(k) = FieldScalar(Rational(1));
  return {spec, std::move(c)};
}

AlgebraElement AlgebraElement::scalar(const AlgebraPtr& spec, const FieldScalar& k) {
  std::vector<FieldScalar> c(spec->dim());
  c[0] = k;
  return {spec, std::move(c)};
}

bool AlgebraElement::is_zero() const {
  for (auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_spec(spec_, o.spec_);
  for (int i = 0; i < spec_->dim(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_spec(spec_, o.spec_);
  for (int i = 0; i < spec_->dim(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_spec(a.spec_, b.spec_);
  const auto& spec = *a.spec_;
  std::vector<FieldScalar> out(spec.dim());
  for (int j = 0; j < spec.dim(); ++j) {
    if (a.c_[j].is_zero()) continue;
    for (int k = 0; k < spec.dim(); ++k) {
      if (b.c_[k].is_zero()) continue;
      FieldScalar ab = a.c_[j] * b.c_[k];
      for (const auto& t : spec.basis_product(j, k)) {
        if (t.unit_sign > 0)
          out[t.l] += ab;
        else if (t.unit_sign < 0)
          out[t.l] -= ab;
        else
          out[t.l] += ab * t.c;
      }
    }
  }
  return {a.spec_, std::move(out)};
}

AlgebraElement operator*(const AlgebraElement& a, const FieldScalar& k) {
  AlgebraElement r = a;
  for (auto& x : r.c_) x *= k;
  return r;
}
AlgebraElement operator*(const FieldScalar& k, const AlgebraElement& a) { return a * k; }
AlgebraElement operator*(const AlgebraElement& a, const Rational& k) {
  return a * FieldScalar(k);
}
AlgebraElement operator*(const Rational& k, const AlgebraElement& a) {
  return a * FieldScalar(k);
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_spec(a.spec_, b.spec_);
  return a.c_ == b.c_;
}

AlgebraElement AlgebraElement::involute() const {
  const auto& t = spec_->involution_matrix();
  std::vector<FieldScalar> out(spec_->dim());
  for (int i = 0; i < spec_->dim(); ++i)
    for (int j = 0; j < spec_->dim(); ++j) {
      if (t[i][j].is_zero()) continue;
      FieldScalar cj = spec_->field() == Field::Complex ? c_[j].conj() : c_[j];
      out[i] += t[i][j] * cj;
    }
  return {spec_, std::move(out)};
}

std::vector<std::vector<FieldScalar>> AlgebraElement::left_regular() const {
  int n = spec_->dim();
  std::vector<std::vector<FieldScalar>> l(n, std::vector<FieldScalar>(n));
  // column k of L(a) is coeff(a * e_k)
  for (int j = 0; j < n; ++j) {
    if (c_[j].is_zero()) continue;
    for (int k = 0; k < n; ++k)
      for (const auto& t : spec_->basis_product(j, k)) l[t.l][k] += c_[j] * t.c;
  }
  return l;
}

double operator_two_norm(const std::vector<std::vector<FieldScalar>>& mat) {
  const int r = static_cast<int>(mat.size());
  const int c = r ? static_cast<int>(mat[0].size()) : 0;
  Eigen::MatrixXcd m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = mat[i][j].to_complex();
  if (r == 0 || c == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

std::vector<double> hermitian_part_eigenvalues(const std::vector<std::vector<FieldScalar>>& mat) {
  const int n = static_cast<int>(mat.size());
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = mat[i][j].to_complex();
  Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

double AlgebraElement::norm() const {
  switch (spec_->norm_policy()) {
    case NormPolicy::CoeffL2: {
      Rational s = 0;
      for (auto& x : c_) s += x.modulus_sq();
      return std::sqrt(s.convert_to<double>());
    }
    case NormPolicy::CoeffSup: {
      double best = 0;
      for (auto& x : c_) best = std::max(best, x.modulus());
      return best;
    }
    case NormPolicy::RegularRep:
    default: {
      double unit = operator_two_norm(one(spec_).left_regular());
      return operator_two_norm(left_regular()) / unit;
    }
  }
}

std::optional<std::vector<std::vector<FieldScalar>>> solve_linear(
    std::vector<std::vector<FieldScalar>> a, std::vector<std::vector<FieldScalar>> b) {
  const int n = static_cast<int>(a.size());
  const int w = n ? static_cast<int>(b[0].size()) : 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    FieldScalar inv = a[col][col].inverse();
    for (int j = col; j < n; ++j) a[col][j] *= inv;
    for (int j = 0; j < w; ++j) b[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      FieldScalar f = a[r][col];
      for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      for (int j = 0; j < w; ++j) b[r][j] -= f * b[col][j];
    }
  }
  return b;
}

AlgebraElement AlgebraElement::inverse() const {
  int n = spec_->dim();
  std::vector<std::vector<FieldScalar>> rhs(n, std::vector<FieldScalar>(1));
  rhs[0][0] = FieldScalar(Rational(1));
  auto sol = solve_linear(left_regular(), rhs);
  if (!sol) throw NotInvertibleError("element has no inverse (singular regular representation)");
  std::vector<FieldScalar> x(n);
  for (int i = 0; i < n; ++i) x[i] = (*sol)[i][0];
  AlgebraElement inv(spec_, std::move(x));
  if (!(inv * *this == one(spec_)))
    throw NotInvertibleError("element has a left but no two-sided inverse (zero divisor)");
  return inv;
}

std::string AlgebraElement::str() const {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < spec_->dim(); ++i) {
    if (c_[i].is_zero()) continue;
    if (any) os << " + ";
    os << "(" << c_[i].str() << ")*" << spec_->basis_labels()[i];
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

void require_same_spec(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a.get() != b.get()) {
    if (!a || !b || a->name() != b->name() || a->dim() != b->dim() ||
        !(a->chi_tensor() == b->chi_tensor()))
      throw SpecMismatchError("operands belong to different algebras");
  }
}

namespace {

// Product of signed-bitmask basis elements e_S e_T for Clifford/Grassmann
// style algebras: sign from transpositions, squares folded in for common
// generators, result mask S xor T.
void masked_product(unsigned s, unsigned t, const std::vector<int>& gensq, int& out_idx,
                    Rational& out_coef) {
  int swaps = 0;
  Rational coef = 1;
  for (unsigned bit = 0; bit < gensq.size(); ++bit) {
    if (!(t & (1u << bit))) continue;
    unsigned higher = s & ~((1u << (bit + 1)) - 1);
    swaps += std::popcount(higher);
    if (s & (1u << bit)) coef *= gensq[bit];
  }
  if (swaps % 2) coef = -coef;
  out_idx = static_cast<int>(s ^ t);
  out_coef = coef;
  if (coef == 0) out_idx = 0;
}

AlgebraPtr masked_algebra(const std::vector<int>& gensq, const std::vector<std::string>& labels,
                          const std::vector<Rational>& invol_diag, const std::string& name) {
  int dim = 1 << gensq.size();
  std::vector<std::vector<std::vector<FieldScalar>>> chi(
      dim, std::vector<std::vector<FieldScalar>>(dim, std::vector<FieldScalar>(dim)));
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) {
      int l;
      Rational c;
      masked_product(static_cast<unsigned>(j), static_cast<unsigned>(k), gensq, l, c);
      if (c != 0) chi[l][j][k] = FieldScalar(c);
    }
  std::vector<std::vector<FieldScalar>> t(dim, std::vector<FieldScalar>(dim));
  for (int i = 0; i < dim; ++i) t[i][i] = FieldScalar(invol_diag[i]);
  return std::make_shared<AlgebraSpec>(Field::Real, labels, std::move(chi), std::move(t),
                                       NormPolicy::RegularRep, name);
}

std::string mask_label(unsigned mask) {
  if (!mask) return "1";
  std::string s = "e";
  for (unsigned bit = 0; bit < 31; ++bit)
    if (mask & (1u << bit)) s += std::to_string(bit + 1);
  return s;
}

}  // namespace

AlgebraPtr clifford_algebra(int p, int q) {
  if (p < 0 || q < 0 || p + q > 4)
    throw ParseError("clifford(p,q) requires p,q >= 0 and p+q <= 4");
  std::vector<int> gensq;
  for (int i = 0; i < p; ++i) gensq.push_back(1);
  for (int i = 0; i < q; ++i) gensq.push_back(-1);
  int dim = 1 << (p + q);
  std::vector<std::string> labels;
  std::vector<Rational> diag;
  for (int mask = 0; mask < dim; ++mask) {
    labels.push_back(mask_label(static_cast<unsigned>(mask)));
    int g = std::popcount(static_cast<unsigned>(mask));
    diag.push_back((g * (g + 1) / 2) % 2 ? Rational(-1) : Rational(1));  // Clifford conjugation
  }
  return masked_algebra(gensq, labels, diag,
                        "clifford:" + std::to_string(p) + "," + std::to_string(q));
}

AlgebraPtr grassmann_algebra(int n) {
  if (n < 1 || n > 4) throw ParseError("grassmann(n) requires 1 <= n <= 4");
  std::vector<int> gensq(n, 0);
  int dim = 1 << n;
  std::vector<std::string> labels;
  std::vector<Rational> diag;
  for (int mask = 0; mask < dim; ++mask) {
    labels.push_back(mask_label(static_cast<unsigned>(mask)));
    int g = std::popcount(static_cast<unsigned>(mask));
    diag.push_back((g * (g - 1) / 2) % 2 ? Rational(-1) : Rational(1));  // reversion
  }
  return masked_algebra(gensq, labels, diag, "grassmann:" + std::to_string(n));
}

AlgebraPtr ternary_algebra(int sign) {
  if (sign != 1 && sign != -1) throw ParseError("ternary relation sign must be +1 or -1");
  int dim = 3;
  Rational eta(sign);
  std::vector<std::vector<std::vector<FieldScalar>>> chi(
      dim, std::vector<std::vector<FieldScalar>>(dim, std::vector<FieldScalar>(dim)));
  auto set = [&](int j, int k, int l, Rational c) { chi[l][j][k] = FieldScalar(c); };
  for (int j = 0; j < dim; ++j) {
    set(0, j, j, 1);
    if (j) set(j, 0, j, 1);
  }
  set(1, 1, 2, 1);        // e * e = e^2
  set(1, 2, 0, eta);      // e * e^2 = eta
  set(2, 1, 0, eta);      // e^2 * e = eta
  set(2, 2, 1, eta);      // e^2 * e^2 = eta * e
  std::vector<std::vector<FieldScalar>> t(dim, std::vector<FieldScalar>(dim));
  t[0][0] = FieldScalar(Rational(1));
  if (sign == 1) {
    // swap e <-> e^2; an (anti-)automorphism only when e^3 = 1
    t[1][2] = FieldScalar(Rational(1));
    t[2][1] = FieldScalar(Rational(1));
  } else {
    t[1][1] = FieldScalar(Rational(1));
    t[2][2] = FieldScalar(Rational(1));
  }
  return std::make_shared<AlgebraSpec>(
      Field::Real, std::vector<std::string>{"1", "e", "e2"}, std::move(chi), std::move(t),
      NormPolicy::RegularRep, sign == 1 ? "ternary" : "ternary:-1");
}

AlgebraPtr builtin_algebra(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "quaternions") {
    auto a = clifford_algebra(0, 2);
    return std::make_shared<AlgebraSpec>(Field::Real,
                                         std::vector<std::string>{"1", "i", "j", "k"},
                                         a->chi_tensor(), a->involution_matrix(),
                                         NormPolicy::RegularRep, "quaternions");
  }
  if (head == "split_quaternions") {
    auto a = clifford_algebra(2, 0);
    return std::make_shared<AlgebraSpec>(Field::Real, a->basis_labels(), a->chi_tensor(),
                                         a->involution_matrix(), NormPolicy::RegularRep,
                                         "split_quaternions");
  }
  if (head == "clifford") {
    auto comma = args.find(',');
    if (comma == std::string::npos) throw ParseError("clifford needs p,q as in clifford:1,2");
    return clifford_algebra(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)));
  }
  if (head == "grassmann") {
    if (args.empty()) throw ParseError("grassmann needs n as in grassmann:3");
    return grassmann_algebra(std::stoi(args));
  }
  if (head == "ternary") return ternary_algebra(args == "-1" ? -1 : 1);
  throw ParseError("unknown builtin algebra '" + name + "'");
}

ValidationReport validate_spec(const AlgebraPtr& spec, int samples, uint64_t seed, double tol) {
  ValidationReport rep;
  int n = spec->dim();
  auto e = [&](int k) { return AlgebraElement::basis(spec, k); };

  {
    bool ok = true;
    std::string detail;
    for (int j = 0; j < n && ok; ++j) {
      if (!(e(0) * e(j) == e(j)) || !(e(j) * e(0) == e(j))) {
        ok = false;
        detail = "e_0 e_" + std::to_string(j) + " != e_" + std::to_string(j);
      }
    }
    rep.items.push_back({"identity", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (!((e(i) * e(j)) * e(k) == e(i) * (e(j) * e(k)))) {
            ok = false;
            detail = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + ")";
          }
    rep.items.push_back({"associativity", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i) {
      if (!(e(i).involute().involute() == e(i))) {
        ok = false;
        detail = "dagger not involutive on e_" + std::to_string(i);
      }
      for (int j = 0; j < n && ok; ++j)
        if (!((e(i) * e(j)).involute() == e(j).involute() * e(i).involute())) {
          ok = false;
          detail = "(e_i e_j)^dag != e_j^dag e_i^dag at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")";
        }
    }
    rep.items.push_back({"involution_anti_automorphism", ok, detail});
  }

  std::mt19937_64 rng(seed);
  auto rand_rat = [&]() {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 8) + 1;
    return Rational(num, den);
  };
  auto rand_scalar = [&]() {
    FieldScalar s(rand_rat());
    if (spec->field() == Field::Complex) s.im = rand_rat();
    return s;
  };
  auto rand_elem = [&]() {
    std::vector<FieldScalar> c(n);
    for (auto& x : c) x = rand_scalar();
    return AlgebraElement(spec, std::move(c));
  };

  {
    bool ok = true;
    std::string detail;
    for (int s = 0; s < samples && ok; ++s) {
      FieldScalar k = rand_scalar();
      AlgebraElement ke = AlgebraElement::scalar(spec, k);
      AlgebraElement expect = AlgebraElement::scalar(spec, FieldScalar(k.modulus_sq()));
      if (!(ke * ke.involute() == expect) || !(ke.involute() * ke == expect)) {
        ok = false;
        detail = "k k^dag != |k|^2 for k = " + k.str();
      }
    }
    rep.items.push_back({"field_involution_axiom", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
      AlgebraElement a = rand_elem();
      double na = a.norm(), nd = a.involute().norm();
      double err = std::abs(na - nd) / std::max(1.0, na);
      worst = std::max(worst, err);
      if (err > tol) ok = false;
    }
    std::ostringstream os;
    os << "max relative deviation " << worst;
    detail = os.str();
    rep.items.push_back({"norm_involution_invariance_sampled", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
      AlgebraElement a = rand_elem(), b = rand_elem();
      double lhs = (a * b).norm(), rhs = a.norm() * b.norm();
      double excess = lhs - rhs * (1 + tol);
      worst = std::max(worst, excess);
      if (excess > 0) ok = false;
    }
    std::ostringstream os;
    os << "max excess " << worst;
    detail = os.str();
    rep.items.push_back({"submultiplicativity_sampled", ok, detail});
  }
  return rep;
}

}  // namespace fueterkit
