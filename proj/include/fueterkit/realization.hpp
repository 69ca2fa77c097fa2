#pragma once

#include <vector>

#include "fueterkit/series.hpp"

namespace fueterkit {

/// State-space encoding of a hyperholomorphic rational function
///   R = D + C odot (I - sum_k (zeta_k - xi_k) A_k)^{-odot} odot
///       (sum_k (zeta_k - xi_k) B_k).
/// The center is immutable; composing realizations with different centers is
/// rejected because the Cauchy product is center dependent.
struct Realization {
  FueterPoint center;
  std::vector<MatrixOverA> A;  // m matrices, N x N
  std::vector<MatrixOverA> B;  // m matrices, N x q
  MatrixOverA C;               // r x N
  MatrixOverA D;               // r x q

  int state_dim() const { return C.cols(); }
  int in_dim() const { return D.cols(); }
  int out_dim() const { return D.rows(); }
  const AlgebraPtr& spec() const { return center.spec(); }

  void validate() const;
};

Realization constant_realization(const FueterPoint& center, const MatrixOverA& value);
/// Realization of (zeta_k - xi_k) M.
Realization monomial_realization(const FueterPoint& center, int k, const MatrixOverA& value);

enum class ExpandMethod { TaylorFormula, Neumann };

/// Series expansion through the requested order; the Taylor-coefficient
/// formula and the Neumann route agree exactly.
MatrixSeries to_series(const Realization& r, int order, ExpandMethod method);

/// Symmetrized matrix power A^beta, memoized over all |beta| <= degree.
std::map<MultiIndex, MatrixOverA> sym_matrix_powers(const std::vector<MatrixOverA>& a,
                                                    int degree);

/// Realization of R^{-odot}; requires D invertible.
Realization inverse(const Realization& r);

Realization product(const Realization& r1, const Realization& r2);
Realization sum(const Realization& r1, const Realization& r2);
Realization concat_row(const Realization& r1, const Realization& r2);
Realization concat_col(const Realization& r1, const Realization& r2);

/// Composes constant and monomial atoms by sum/product so that
/// to_series(result) reproduces the polynomial exactly.
Realization from_polynomial(const MatrixSeries& p);

/// G(zeta) = G0 odot (I - sum_k (zeta_k - xi_k) A_k)^{-odot}.
MatrixSeries resolvent_span(const FueterPoint& center, const std::vector<MatrixOverA>& a,
                            const MatrixOverA& g0, int order);

/// Gleason solutions g_k = C odot (I - sum (zeta_k - xi_k) A_k)^{-odot} B_k eta
/// for f = to_series(r) eta.
std::vector<MatrixSeries> gleason_via_realization(const Realization& r, const MatrixOverA& eta,
                                                  int order);

/// Residual f - f(xi) - sum_k (zeta_k - xi_k) odot g_k for matrix series.
MatrixSeries gleason_residual_matrix(const MatrixSeries& f, const std::vector<MatrixSeries>& g);

}  // namespace fueterkit
