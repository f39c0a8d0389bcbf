// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "liemeans/means.hpp"

namespace liemeans {

/// Second-order statistic about a supplied anchor. `matrix` is m^2 x m^2 for
/// the extrinsic Euclidean kind (column-major vec stacking) and n x n for the
/// chart-based kinds; `variance` is its trace.
struct CovReport {
  enum class Kind { EuclideanExtrinsic, GroupTheoretic, Karcher };

  Kind kind = Kind::EuclideanExtrinsic;
  Matrix matrix;
  double variance = 0.0;
  GroupElement anchor;
};

const char* to_string(CovReport::Kind kind);

/// Extrinsic covariance sum_i w_i vec(g_i - mu_E) vec(g_i - mu_E)^T with
/// column-major vec; the trace equals sum_i w_i ||g_i - mu_E||_F^2.
CovReport euclidean_covariance(const EmpiricalDistribution& d);

/// Minimal value of the Fréchet cost: sum_i w_i D(mu, g_i)^2.
double frechet_variance(const EmpiricalDistribution& d, const DistanceKind& kind,
                        const GroupElement& mu);

/// Chart covariance sum_i w_i z_i z_i^T with z_i = log(mu^{-1} g_i)^vee.
/// The anchor must be supplied by the caller (typically a group-theoretic
/// mean); there is no hidden re-estimation.
CovReport group_covariance(const EmpiricalDistribution& d, const GroupElement& mu);

/// Same outer-product form with Riemannian log coordinates. Coincides with
/// group_covariance when the metric is bi-invariant.
CovReport karcher_covariance(const EmpiricalDistribution& d, const InnerProduct& ip,
                             const GroupElement& mu, const ShootConfig& shoot = {});

/// First-order propagation of (mean, covariance) under the group product of
/// independent random variables:
///   mu12 = mu1 * mu2,  Sigma12 = Ad_{mu2}^{-1} Sigma1 Ad_{mu2}^{-T} + Sigma2.
/// Only valid on unimodular groups; refuses otherwise.
std::pair<GroupElement, Matrix> propagate(const GroupElement& mu1, const Matrix& sigma1,
                                          const GroupElement& mu2, const Matrix& sigma2);

/// cost_L weighted by the inverse sample covariance at mu. For symmetric
/// distributions on unimodular groups the gradient vanishes at mu exactly.
/// Throws SingularCovarianceError when the covariance is not invertible.
double weighted_cost(const EmpiricalDistribution& d, const GroupElement& mu);
Vector weighted_cost_gradient(const EmpiricalDistribution& d, const GroupElement& mu);

}  // namespace liemeans
