#pragma once

#include <utility>
#include <vector>

#include "fueterkit/series.hpp"
#include "fueterkit/weights.hpp"

namespace fueterkit {

/// Elements of the weighted modules are left Fueter series centered at the
/// origin; all identities below are exact on polynomial truncations.

void require_module_element(const FueterSeries& f);

/// [f,g] = sum_alpha c_alpha g_alpha^dag f_alpha.
AlgebraElement hermitian_form(const FueterSeries& f, const FueterSeries& g,
                              const WeightFamily& w);

/// (sum |c_alpha| N(f_alpha)^2)^(1/2).
double module_norm(const FueterSeries& f, const WeightFamily& w);

/// <f,g>_l: the e_l component of [f,g], computed through the characteristic
/// operators (the chi contraction runs over indices 0..m).
FieldScalar component_form(const FueterSeries& f, const FueterSeries& g, const WeightFamily& w,
                           int l);

/// K_c(.,xi) b truncated at the given order. Evaluation points enter only
/// through their zeta tuple, so arbitrary tuples in A^m are accepted.
FueterSeries kernel_series(const std::vector<AlgebraElement>& xi, int order,
                           const WeightFamily& w, const AlgebraElement& b);
FueterSeries kernel_series(const FueterPoint& xi, int order, const WeightFamily& w,
                           const AlgebraElement& b);

/// ([f, K_c(.,xi) b], b^dag f(xi)); throws TruncationError when the kernel
/// order cannot reproduce f exactly.
std::pair<AlgebraElement, AlgebraElement> reproducing_check(const FueterSeries& f,
                                                            const std::vector<AlgebraElement>& xi,
                                                            const AlgebraElement& b,
                                                            const WeightFamily& w,
                                                            int kernel_order);
std::pair<AlgebraElement, AlgebraElement> reproducing_check(const FueterSeries& f,
                                                            const FueterPoint& xi,
                                                            const AlgebraElement& b,
                                                            const WeightFamily& w,
                                                            int kernel_order);

/// M_{zeta_k}: coefficient shift.
FueterSeries mult_op(int k, const FueterSeries& f);
/// M_s f = s odot f at the origin.
FueterSeries mult_by(const FueterSeries& s, const FueterSeries& f);
/// Fock derivative operator d_k.
FueterSeries derivative_op(int k, const FueterSeries& f);

/// ([R_k f, g], [f, M_k g]) in the Drury-Arveson module.
std::pair<AlgebraElement, AlgebraElement> da_adjoint_check(int k, const FueterSeries& f,
                                                           const FueterSeries& g);

struct ContractionGap {
  AlgebraElement gap;         // [f,f] - [M_k f, M_k f]
  AlgebraElement witness_sum; // sum_alpha d_alpha^2 f_alpha^dag f_alpha
  /// (d_alpha^2, f_alpha) pairs with d_alpha^2 = c_alpha(|alpha|-alpha_k)/(|alpha|+1)
  std::vector<std::pair<Rational, AlgebraElement>> witness;
  bool exact = false;
};
ContractionGap da_contraction_gap(const FueterSeries& f, int k);

struct EvaluationIdentity {
  bool series_telescopes = false;  // sum_k M_k R_k f + f(0) == f
  AlgebraElement form_lhs;         // [f,f] - sum_k [R_k f, R_k f]
  AlgebraElement form_rhs;         // f(0)^dag f(0)
  bool exact = false;
};
EvaluationIdentity evaluation_identity_check(const FueterSeries& f);

/// ([d_k f, g], [f, M_k g]) in the Fock module.
std::pair<AlgebraElement, AlgebraElement> fock_adjoint_check(int k, const FueterSeries& f,
                                                             const FueterSeries& g);

/// Both routes of the multiplier/kernel pairing
/// [M_s^* K_d(.,xi) b1, K_c(.,zeta) b2]: the defining adjoint pairing in
/// W(d) and the closed form; exact on polynomial data when the d-kernel is
/// truncated at kernel_order + deg s.
std::pair<AlgebraElement, AlgebraElement> multiplier_kernel_pairing(
    const FueterSeries& s, const std::vector<AlgebraElement>& xi,
    const std::vector<AlgebraElement>& zeta, const AlgebraElement& b1,
    const AlgebraElement& b2, const WeightFamily& wc, const WeightFamily& wd,
    int kernel_order);
std::pair<AlgebraElement, AlgebraElement> multiplier_kernel_pairing(
    const FueterSeries& s, const FueterPoint& xi, const FueterPoint& zeta,
    const AlgebraElement& b1, const AlgebraElement& b2, const WeightFamily& wc,
    const WeightFamily& wd, int kernel_order);

/// Blaschke factor B_xi as a 1 x m row of series at the origin:
/// (1-xi xi^*)^{1/2} odot (1-zeta xi^*)^{-odot} odot (zeta-xi)(I-xi^* xi)^{-1/2}.
/// The square-root factors are binomial series to tolerance tol; the other
/// factors are exact. xi is a zeta tuple with ||xi||_{A^m} < 1.
std::vector<FueterSeries> blaschke_factor(const std::vector<AlgebraElement>& xi, int order,
                                          double tol);
std::vector<FueterSeries> blaschke_factor(const FueterPoint& xi, int order, double tol);

// --- coefficient-space operator matrices -----------------------------------

/// Monomial basis |alpha| <= order in (degree, lex) order.
std::vector<MultiIndex> monomial_basis(int m, int order);

/// Matrix of M_s on the monomial basis: T[alpha][beta] = s_{alpha-beta},
/// acting on coefficient stacks by left multiplication.
MatrixOverA multiplier_matrix(const FueterSeries& s, const std::vector<MultiIndex>& basis);

/// Adjoint with respect to [.,.]: (T^*)_{beta,alpha} =
/// (c_alpha/c_beta) (T_{alpha,beta})^dag.
MatrixOverA weighted_adjoint(const MatrixOverA& t, const std::vector<MultiIndex>& basis,
                             const WeightFamily& w);

/// Nondegeneracy at truncation order: [zeta^alpha, g] = 0 for all
/// |alpha| <= order implies g = 0.
bool nondegenerate_pairing_implies_zero(const FueterSeries& g, const WeightFamily& w);

struct GramSignature {
  int l = 0;
  int positive = 0, negative = 0, zero = 0;
};

/// Numeric eigenvalue signature of the K_l component forms on the span of
/// monomials times basis elements, one report per direction l.
std::vector<GramSignature> component_gram_signatures(const AlgebraPtr& spec,
                                                     const WeightFamily& w, int order,
                                                     double tol = 1e-9);

struct BlaschkeGramReport {
  int order = 0;
  double tol = 0;
  double max_error = 0;  // entrywise block-norm gap between the two sides
};

/// Compares I - B_xi B_xi^* against the square-root/resolvent form of the
/// Drury-Arveson identity on the monomial basis. Truncation-level numeric
/// check; the only inexactness comes from the square-root factors.
BlaschkeGramReport blaschke_gram_check(const std::vector<AlgebraElement>& xi, int order,
                                       double tol);
BlaschkeGramReport blaschke_gram_check(const FueterPoint& xi, int order, double tol);

}  // namespace fueterkit
