#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fueterkit/scalar.hpp"

namespace fueterkit {

/// Symmetrized product of a multiset given as (item, multiplicity) pairs:
/// the S_N average of all orderings, N = sum of multiplicities. Computed by
/// the recursion sym(M) = (1/N) sum_i multiplicity_i * sym(M - i) * item_i,
/// memoized over sub-multisets. T needs *, +, and * Rational.
template <class T>
T sym_power(const std::vector<std::pair<T, int>>& factors) {
  int total = 0;
  for (auto& [item, count] : factors) {
    if (count < 0) throw ShapeError("negative multiplicity in symmetrized product");
    total += count;
  }
  if (total == 0) throw ShapeError("empty symmetrized product");

  std::map<std::vector<int>, T> memo;
  std::vector<int> full(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) full[i] = factors[i].second;

  auto rec = [&](auto&& self, const std::vector<int>& key) -> const T& {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int n = 0;
    for (int x : key) n += x;
    T acc = [&] {
      bool first = true;
      T sum;
      std::vector<int> sub = key;
      for (size_t i = 0; i < key.size(); ++i) {
        if (key[i] == 0) continue;
        sub[i] -= 1;
        T term = (n == 1) ? factors[i].first : self(self, sub) * factors[i].first;
        sub[i] += 1;
        if (key[i] != 1) term = term * Rational(key[i]);
        if (first) {
          sum = std::move(term);
          first = false;
        } else {
          sum = sum + term;
        }
      }
      return sum;
    }();
    if (n > 1) acc = acc * Rational(1, n);
    return memo.emplace(key, std::move(acc)).first->second;
  };
  return rec(rec, full);
}

/// Symmetrized product of an explicit list; equal items are grouped first so
/// the memoized recursion applies.
template <class T>
T sym_product(std::span<const T> items) {
  if (items.empty()) throw ShapeError("empty symmetrized product");
  std::vector<std::pair<T, int>> grouped;
  for (const T& x : items) {
    bool found = false;
    for (auto& [item, count] : grouped) {
      if (item == x) {
        ++count;
        found = true;
        break;
      }
    }
    if (!found) grouped.emplace_back(x, 1);
  }
  return sym_power(grouped);
}

template <class T>
T sym_product(const std::vector<T>& items) {
  return sym_product(std::span<const T>(items));
}

}  // namespace fueterkit
