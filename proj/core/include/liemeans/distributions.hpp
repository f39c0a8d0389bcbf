// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "liemeans/group_spec.hpp"
#include "liemeans/rng.hpp"

namespace liemeans {

enum class ShiftSide { Left, Right };

/// Weighted sample set standing in for a pdf on the group. Immutable after
/// construction: weights are positive and sum to one, every sample passes its
/// group's membership check.
struct EmpiricalDistribution {
  GroupSpec group;
  std::vector<GroupElement> samples;
  std::vector<double> weights;

  std::size_t size() const { return samples.size(); }
};

/// Normalizing constructor. Empty weights means uniform 1/N.
EmpiricalDistribution make_empirical(const GroupSpec& spec,
                                     std::vector<GroupElement> samples,
                                     std::vector<double> weights = {});

/// Samples mapped g -> hg (left) or g -> gh (right); weights unchanged.
EmpiricalDistribution shift(const EmpiricalDistribution& d, const GroupElement& h,
                            ShiftSide side);

/// Samples mapped g -> g^{-1}; weights unchanged.
EmpiricalDistribution invert(const EmpiricalDistribution& d);

/// Gaussian in the exponential chart at mu: draws x ~ N(0, sigma) in R^n and
/// emits mu * exp(hat(x)), uniform weights. Deterministic given the seed.
EmpiricalDistribution sample_concentrated(const GroupSpec& spec,
                                          const GroupElement& mu,
                                          const Matrix& sigma, int n_samples,
                                          RngSeed seed);

/// Same draw, symmetrized: emits both mu exp(hat(x)) and mu exp(-hat(x)), so
/// the result is symmetric about mu.
EmpiricalDistribution sample_concentrated_symmetrized(const GroupSpec& spec,
                                                      const GroupElement& mu,
                                                      const Matrix& sigma,
                                                      int n_pairs, RngSeed seed);

/// Uniform (normalized Haar) samples; supported on the compact built-ins
/// SO(2) (uniform angle) and SO(3) (uniform unit quaternion).
EmpiricalDistribution sample_uniform_haar(const GroupSpec& spec, int n_samples,
                                          RngSeed seed);

/// Monte Carlo surrogate of the distribution of g1 * g2 for independent
/// inputs: draws N pairs by weight and multiplies.
EmpiricalDistribution product_distribution(const EmpiricalDistribution& d1,
                                           const EmpiricalDistribution& d2,
                                           int n_samples, RngSeed seed);

/// Weighted expectation sum_i w_i phi(g_i), accumulated in fixed sample order
/// with compensated summation. phi evaluations may run in parallel; the
/// reduction order is fixed, so results do not depend on the worker count.
/// DomainErrors raised by phi are aggregated with the offending indices.
Matrix expect_matrix(const EmpiricalDistribution& d,
                     const std::function<Matrix(const GroupElement&)>& phi);

}  // namespace liemeans
