// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liemeans {

/// Base class of all liemeans exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element lies outside the principal-log chart (or a related chart
/// precondition fails). When raised while mapping a sample set,
/// `sample_indices` lists the offending samples.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what,
                       std::vector<std::size_t> indices = {})
      : Error(what), sample_indices(std::move(indices)) {}

  std::vector<std::size_t> sample_indices;
};

/// Two values belong to different groups.
class GroupMismatchError : public Error {
 public:
  using Error::Error;
};

/// A matrix fails its group membership predicate.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// Numerically singular input where an invertible matrix is required.
class SingularInputError : public Error {
 public:
  using Error::Error;
};

/// Weighted quaternion sum too close to the origin to normalize.
class NearZeroSumError : public Error {
 public:
  using Error::Error;
};

/// Sample covariance is singular and cannot be used as a weight.
class SingularCovarianceError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver exhausted its budget. Carries the best residual seen.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double best_residual,
                      int iterations)
      : Error(what), best_residual(best_residual), iterations(iterations) {}

  double best_residual;
  int iterations;
};

}  // namespace liemeans
