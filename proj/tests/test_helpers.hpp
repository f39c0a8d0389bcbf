// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <liemeans/groups.hpp>
#include <liemeans/lie_core.hpp>
#include <liemeans/rng.hpp>

namespace liemeans::testing {

/// Random algebra coordinates with rotation block bounded away from the
/// principal-branch boundary and translation block in [-t_max, t_max].
inline Vector random_coords(const GroupSpec& spec, CounterRng& rng,
                            double rot_max, double t_max = 2.0) {
  const int n = spec.algebra_dim();
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = 2.0 * rng.uniform() - 1.0;
  switch (spec.family()) {
    case GroupFamily::SpecialOrthogonal: {
      const double norm = x.norm();
      if (norm > 0) x *= (rot_max * rng.uniform()) / norm;
      break;
    }
    case GroupFamily::SpecialEuclidean: {
      const int rot_dim = spec.spatial_dim() == 2 ? 1 : 3;
      Vector rot = x.head(rot_dim);
      const double norm = rot.norm();
      if (norm > 0) x.head(rot_dim) = rot * (rot_max * rng.uniform()) / norm;
      x.tail(n - rot_dim) *= t_max;
      break;
    }
    default:
      x *= rot_max;
      break;
  }
  return x;
}

inline GroupElement random_element(const GroupSpec& spec, CounterRng& rng,
                                   double rot_max = 2.5, double t_max = 2.0) {
  return group_exp(hat(spec, random_coords(spec, rng, rot_max, t_max)));
}

/// Truncated power series sum_{i<=terms} X^i / i!, an oracle for exp.
inline Matrix exp_series(const Matrix& x, int terms = 30) {
  Matrix sum = Matrix::Identity(x.rows(), x.cols());
  Matrix power = Matrix::Identity(x.rows(), x.cols());
  double factorial = 1.0;
  for (int i = 1; i <= terms; ++i) {
    power = power * x;
    factorial *= i;
    sum += power / factorial;
  }
  return sum;
}

/// Rotation angle between two elements of SO(3) (also usable on rotation
/// blocks), in radians. Uses the chord length, which stays accurate near 0
/// where acos of the trace loses half the digits.
inline double rotation_angle_between(const Matrix& r1, const Matrix& r2) {
  const double chord = (r1 - r2).norm() / (2.0 * std::sqrt(2.0));
  return 2.0 * std::asin(std::min(1.0, chord));
}

/// A copy of the group without closed forms, for closed-form-vs-generic
/// comparisons.
inline GroupSpec strip_closed_forms(const GroupSpec& spec) {
  std::vector<Matrix> basis;
  for (int i = 0; i < spec.algebra_dim(); ++i) basis.push_back(spec.basis(i));
  return GroupSpec::make(spec.name() + "#generic", spec.ambient_dim(),
                         spec.algebra_dim(), std::move(basis),
                         spec.structure_constants());
}

}  // namespace liemeans::testing
