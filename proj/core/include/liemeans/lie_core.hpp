// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "liemeans/group_spec.hpp"

namespace liemeans {

/// Exponential map, total on the algebra. Uses the group's closed form when
/// available, otherwise scaling-and-squaring with the order-13 rational
/// approximant.
GroupElement group_exp(const AlgebraElement& x);

/// Principal logarithm. Throws DomainError outside the principal branch
/// (SO(3) angle >= pi - 1e-6, real-negative eigenvalues in the generic
/// path); such a failure signals that a sample falls outside the chart of a
/// candidate mean.
AlgebraElement group_log(const GroupElement& g);

/// Matrix of ad_X in the declared basis: (ad_X)_{ij} = X^k C(k,j,i).
Matrix ad_matrix(const AlgebraElement& x);

/// Same, from raw coordinates (avoids building the algebra matrix).
Matrix ad_matrix_coords(const GroupSpec& spec, const Vector& coords);

/// Matrix of Ad_g, columns vee(g E_i g^{-1}).
Matrix Ad_matrix(const GroupElement& g);

/// True iff sum_j C(i,j,j) == 0 for every i (equivalently tr(ad_{E_i}) = 0),
/// i.e. the left Haar measure is bi-invariant.
bool is_unimodular(const GroupSpec& spec, double tol = 1e-12);

/// Jacobian of the log map at h: I + ad_Z/2 + sum_i B_{2i}/(2i)! ad_Z^{2i}
/// with Z = log h. Requires the spectral radius of ad_Z below 2*pi.
Matrix jacobian_log(const GroupElement& h);

/// Inverse of jacobian_log(exp X), computed by the dual series
/// sum_k (-ad_X)^k / (k+1)!.
Matrix jacobian_exp(const AlgebraElement& x);

/// Series variants on a precomputed ad matrix (used by solvers that already
/// hold the log coordinates).
Matrix jacobian_log_from_ad(const Matrix& ad);
Matrix jacobian_exp_from_ad(const Matrix& ad);

/// New spec over the basis E'_i = sum_j (sqrt(W)^{-1})_{ij} E_j, in which the
/// inner product described by W becomes the identity. W must be SPD.
GroupSpec orthonormalize_basis(const GroupSpec& spec, const Matrix& w);

}  // namespace liemeans
