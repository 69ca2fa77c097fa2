#pragma once

#include <vector>

#include "fueterkit/scalar.hpp"

namespace fueterkit {

/// Exponent vector over the Fueter variables zeta_1..zeta_m. Entry j holds
/// the exponent of zeta_{j+1}.
using MultiIndex = std::vector<int>;

inline int mi_total(const MultiIndex& a) {
  int t = 0;
  for (int x : a) t += x;
  return t;
}

inline BigInt mi_factorial(const MultiIndex& a) {
  BigInt r = 1;
  for (int x : a) r *= factorial(x);
  return r;
}

/// |a|! / a!
inline Rational mi_multinomial(const MultiIndex& a) {
  return Rational(factorial(mi_total(a)), mi_factorial(a));
}

inline MultiIndex mi_zero(int m) { return MultiIndex(m, 0); }

/// iota_k, 1-based k as in the variable numbering.
inline MultiIndex mi_unit(int m, int k) {
  MultiIndex a(m, 0);
  a[k - 1] = 1;
  return a;
}

inline bool mi_leq(const MultiIndex& a, const MultiIndex& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

/// Componentwise difference; caller guarantees a >= b.
inline MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

/// All multi-indices with |alpha| == degree, lexicographically sorted.
inline std::vector<MultiIndex> indices_of_degree(int m, int degree) {
  std::vector<MultiIndex> out;
  MultiIndex cur(m, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == m - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (m == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

/// All multi-indices of length m with |alpha| <= degree, sorted by
/// (degree, lexicographic) so enumeration order is deterministic.
inline std::vector<MultiIndex> indices_up_to(int m, int degree) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= degree; ++d) {
    auto layer = indices_of_degree(m, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace fueterkit
