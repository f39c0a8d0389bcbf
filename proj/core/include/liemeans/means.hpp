// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>

#include "liemeans/distributions.hpp"
#include "liemeans/metric.hpp"

namespace liemeans {

/// Estimator output. `residual` is method-specific: the fixed-point update
/// norm for the iterative means, ||mean - mu_E||_F for the projected mean,
/// zero for the closed forms. `cost` is set when the method minimizes an
/// explicit cost.
struct MeanReport {
  GroupElement mean;
  std::string method;
  int iterations = 0;
  double residual = 0.0;
  std::optional<double> cost;
  bool converged = false;
  std::map<std::string, double> diagnostics;
};

struct SolverConfig {
  enum class Init { Projected, Identity, FirstSample, Given };

  double tol = 1e-10;       // 2-norm of the algebra-coordinate update
  int max_iter = 200;
  Init init = Init::Projected;
  std::optional<GroupElement> init_point;  // used with Init::Given
};

/// Weighted matrix average sum_i w_i g_i. Generally not a group element, so
/// it is returned as a raw matrix.
Matrix euclidean_mean(const EmpiricalDistribution& d);

/// Euclidean mean mapped back to the group: SVD rotation factor on SO(d);
/// on SE(d), the rotation block is projected and the translation average is
/// kept as is.
MeanReport projected_mean(const EmpiricalDistribution& d);

/// Closed-form chart average h * exp(sum_i w_i log(h^{-1} g_i)).
/// Throws DomainError naming the samples outside the chart of h.
MeanReport log_euclidean_mean(const EmpiricalDistribution& d, const GroupElement& h);

/// Fixed-point iteration mu <- mu * exp(sum_i w_i log(mu^{-1} g_i)^vee).
/// The converged point satisfies the zero-mean-log condition; diagnostics
/// carry the right-handed residual, which relates to the left one through
/// Ad_mu.
MeanReport group_theoretic_mean(const EmpiricalDistribution& d,
                                const SolverConfig& cfg = {});

/// Local minimizer of C(h) = sum_i w_i D(h, g_i)^2 by descent in the
/// exponential chart at the iterate: central-difference gradient of
/// x -> C(h exp(hat(x))) and Armijo backtracking.
MeanReport frechet_mean(const EmpiricalDistribution& d, const DistanceKind& kind,
                        const SolverConfig& cfg = {});

/// Like the group-theoretic fixed point with the Riemannian exp/log of the
/// left-invariant metric in place of the Lie-theoretic maps. Coincides with
/// group_theoretic_mean when the metric is bi-invariant.
MeanReport karcher_mean(const EmpiricalDistribution& d, const InnerProduct& ip,
                        const SolverConfig& cfg = {},
                        const ShootConfig& shoot = {});

/// Normalized weighted quaternion sum on SO(3). When `hemisphere_align` is
/// set (default), every quaternion is flipped into the half-space of the
/// first sample before averaging; without alignment, near-antipodal
/// representatives of the same rotation can cancel, which surfaces as
/// NearZeroSumError.
MeanReport quaternion_projected_mean(const EmpiricalDistribution& d,
                                     bool hemisphere_align = true);

/// Squared-log-norm cost sum_i w_i ||log(g_i^{-1} h)^vee||_W^2 and its exact
/// gradient along the basis directions (through the Jacobian of the log).
double cost_L(const EmpiricalDistribution& d, const InnerProduct& ip,
              const GroupElement& h);
Vector cost_L_gradient(const EmpiricalDistribution& d, const InnerProduct& ip,
                       const GroupElement& h);

/// Runs the fixed point from several starts: identity, the projected mean
/// when defined, and k extra starts (Haar draws on compact groups, sample
/// points otherwise). Non-converged runs are kept with converged = false.
std::vector<MeanReport> group_mean_multistart(const EmpiricalDistribution& d,
                                              const SolverConfig& cfg, int k,
                                              RngSeed seed);

/// Among converged multistart results, picks the one minimizing cost_L:
/// the solution consistent with the distance-based means.
MeanReport select_min_cost(const EmpiricalDistribution& d, const InnerProduct& ip,
                           const std::vector<MeanReport>& candidates);

}  // namespace liemeans
