#include "fueterkit/vpoly.hpp"

#include <sstream>

namespace fueterkit {

VPolynomial VPolynomial::constant(const AlgebraElement& a) {
  VPolynomial p(a.spec());
  p.add_term(Exponent(a.spec()->dim(), 0), a);
  return p;
}

VPolynomial VPolynomial::variable(const AlgebraPtr& spec, int j) {
  if (j < 0 || j >= spec->dim()) throw ShapeError("variable index out of range");
  VPolynomial p(spec);
  Exponent e(spec->dim(), 0);
  e[j] = 1;
  p.add_term(e, AlgebraElement::one(spec));
  return p;
}

int VPolynomial::degree() const {
  int d = 0;
  for (auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

void VPolynomial::add_term(const Exponent& e, const AlgebraElement& c) {
  if (static_cast<int>(e.size()) != spec_->dim()) throw ShapeError("exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VPolynomial VPolynomial::operator-() const {
  VPolynomial r(spec_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

VPolynomial& VPolynomial::operator+=(const VPolynomial& o) {
  if (!spec_) spec_ = o.spec_;
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

VPolynomial& VPolynomial::operator-=(const VPolynomial& o) {
  if (!spec_) spec_ = o.spec_;
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

VPolynomial operator*(const VPolynomial& a, const VPolynomial& b) {
  require_same_spec(a.spec_, b.spec_);
  VPolynomial r(a.spec_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      VPolynomial::Exponent e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

VPolynomial operator*(const VPolynomial& a, const Rational& k) {
  VPolynomial r(a.spec_);
  if (k == 0) return r;
  for (auto& [e, c] : a.terms_) r.terms_.emplace(e, c * k);
  return r;
}

bool operator==(const VPolynomial& a, const VPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

VPolynomial VPolynomial::left_mul(const AlgebraElement& v) const {
  VPolynomial r(spec_);
  for (auto& [e, c] : terms_) r.add_term(e, v * c);
  return r;
}

VPolynomial VPolynomial::right_mul(const AlgebraElement& v) const {
  VPolynomial r(spec_);
  for (auto& [e, c] : terms_) r.add_term(e, c * v);
  return r;
}

VPolynomial VPolynomial::derivative(int j) const {
  VPolynomial r(spec_);
  for (auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponent d = e;
    d[j] -= 1;
    r.add_term(d, c * Rational(e[j]));
  }
  return r;
}

AlgebraElement VPolynomial::eval(std::span<const FieldScalar> v) const {
  if (static_cast<int>(v.size()) != spec_->dim())
    throw ShapeError("evaluation point length mismatch");
  AlgebraElement acc = AlgebraElement::zero(spec_);
  for (auto& [e, c] : terms_) {
    FieldScalar mono(Rational(1));
    for (size_t i = 0; i < e.size(); ++i)
      for (int rep = 0; rep < e[i]; ++rep) mono *= v[i];
    acc += mono * c;
  }
  return acc;
}

std::string VPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool anyvar = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (anyvar) os << "*";
      os << "v" << i;
      if (e[i] > 1) os << "^" << e[i];
      anyvar = true;
    }
    if (anyvar) os << "*";
    os << "[" << c.str() << "]";
  }
  return os.str();
}

VPolynomial apply_dirac(const VPolynomial& p) {
  VPolynomial out = p.derivative(0);
  for (int k = 1; k <= p.spec()->m(); ++k)
    out += p.derivative(k).left_mul(AlgebraElement::basis(p.spec(), k));
  return out;
}

}  // namespace fueterkit
