#pragma once

#include <random>

#include "fueterkit/realization.hpp"
#include "fueterkit/series.hpp"

namespace fueterkit {

/// Seeded generator for property checks. Sampling goes through explicit
/// modulo reduction rather than std distributions so that identical seeds
/// produce identical reports on every platform.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : g_(seed) {}

  uint64_t raw() { return g_(); }

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(raw() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational rational(int max_num = 4, int max_den = 3) {
    return {uniform(-max_num, max_num), uniform(1, max_den)};
  }

  Rational nonzero_rational(int max_num = 4, int max_den = 3) {
    Rational r = rational(max_num, max_den);
    while (r == 0) r = rational(max_num, max_den);
    return r;
  }

  FieldScalar scalar(const AlgebraPtr& spec) {
    FieldScalar s(rational());
    if (spec->field() == Field::Complex) s.im = rational();
    return s;
  }

  AlgebraElement element(const AlgebraPtr& spec) {
    std::vector<FieldScalar> c(spec->dim());
    for (auto& x : c) x = scalar(spec);
    return {spec, std::move(c)};
  }

  AlgebraElement invertible_element(const AlgebraPtr& spec, int tries = 64) {
    for (int t = 0; t < tries; ++t) {
      AlgebraElement a = element(spec);
      try {
        (void)a.inverse();
        return a;
      } catch (const NotInvertibleError&) {
      }
    }
    return AlgebraElement::one(spec);
  }

  FueterPoint point(const AlgebraPtr& spec) {
    std::vector<FieldScalar> v(spec->dim());
    for (auto& x : v) x = scalar(spec);
    return {spec, std::move(v)};
  }

  MatrixOverA matrix(const AlgebraPtr& spec, int rows, int cols) {
    MatrixOverA m(spec, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = element(spec);
    return m;
  }

  MatrixOverA invertible_matrix(const AlgebraPtr& spec, int n, int tries = 64) {
    for (int t = 0; t < tries; ++t) {
      MatrixOverA m = matrix(spec, n, n);
      try {
        (void)mat_invert(m);
        return m;
      } catch (const NotInvertibleError&) {
      }
    }
    return MatrixOverA::identity(spec, n);
  }

  /// Random polynomial with a sparse coefficient map.
  FueterSeries series(const FueterPoint& center, int order, int terms = 6) {
    FueterSeries s(center, order);
    const int m = center.spec()->m();
    auto all = indices_up_to(m, order);
    for (int t = 0; t < terms; ++t) {
      const MultiIndex& a = all[static_cast<size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
      s.add_coeff(a, element(center.spec()));
    }
    return s;
  }

  MatrixSeries matrix_series(const FueterPoint& center, int order, int rows, int cols,
                             int terms = 6) {
    MatrixSeries s(center, order, rows, cols);
    const int m = center.spec()->m();
    auto all = indices_up_to(m, order);
    for (int t = 0; t < terms; ++t) {
      const MultiIndex& a = all[static_cast<size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
      s.add_coeff(a, matrix(center.spec(), rows, cols));
    }
    return s;
  }

  Realization realization(const FueterPoint& center, int state, int in, int out) {
    const auto& spec = center.spec();
    Realization r{center, {}, {}, matrix(spec, out, state), matrix(spec, out, in)};
    for (int k = 0; k < spec->m(); ++k) {
      r.A.push_back(matrix(spec, state, state));
      r.B.push_back(matrix(spec, state, in));
    }
    return r;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace fueterkit
