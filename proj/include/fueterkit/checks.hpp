#pragma once

#include "fueterkit/random_source.hpp"
#include "fueterkit/report.hpp"
#include "fueterkit/weighted_module.hpp"

namespace fueterkit {

/// Property checks at desk scale; each returns a machine-readable report.
/// All exact checks compare rational coefficients, never floats.

CheckReport check_algebra_valid(const AlgebraPtr& spec, int samples, uint64_t seed, double tol);

/// apply_D(monomial_expand(alpha, xi)) == 0 for all |alpha| <= order and
/// random rational centers.
CheckReport check_monomial_hyperholomorphy(const AlgebraPtr& spec, int order, int centers,
                                           uint64_t seed);

/// D(zeta_j zeta_k) == [e_j, e_k] v_0^2 for all j < k, and the symmetrized
/// pair is annihilated.
CheckReport check_commutator_obstruction(const AlgebraPtr& spec);

/// The quaternionic worked example: zeta_1 k odot zeta_1 i at the origin vs
/// at the center with zeta_k = e_k.
CheckReport check_center_dependence();

CheckReport check_gleason(const AlgebraPtr& spec, int count, int order, uint64_t seed);

/// taylor==neumann on `count` random realizations; the composite checks
/// (inverse, product, sum, concatenations, from_polynomial, Gleason) run on
/// the first `heavy_count` of them (negative means all).
CheckReport check_realization_calculus(const AlgebraPtr& spec, int count, int order,
                                       uint64_t seed, int heavy_count = -1);

CheckReport check_da_structure(const AlgebraPtr& spec, int order, uint64_t seed);

CheckReport check_fock_structure(const AlgebraPtr& spec, int order, int pairs, uint64_t seed);

CheckReport check_reproducing(const AlgebraPtr& spec, int order, int vectors, uint64_t seed);

CheckReport check_blaschke(double tol);

CheckReport check_frechet(int count, uint64_t seed);

CheckReport check_backward_shift_invariance(const AlgebraPtr& spec, int order, uint64_t seed);

/// Serial and OpenMP kernels agree bit for bit.
CheckReport check_kernel_agreement(const AlgebraPtr& spec, int order, uint64_t seed);

/// The full per-algebra suite (quaternion-only checks included when the
/// algebra is the quaternions).
std::vector<CheckReport> run_suite(const AlgebraPtr& spec, int order, uint64_t seed, double tol);

}  // namespace fueterkit
