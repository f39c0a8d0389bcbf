// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "liemeans/group_spec.hpp"

namespace liemeans {

/// Rotation/translation blocks of an SE(d) element.
struct PoseParts {
  Matrix rotation;     // d x d, special orthogonal
  Vector translation;  // R^d
};

/// Unit quaternion, scalar-first convention (w, x, y, z). q and -q describe
/// the same rotation.
struct UnitQuaternion {
  Eigen::Vector4d q;
};

/// Registry of the built-in groups: "SO2", "SO3", "SE2", "SE3", "AFF1".
/// Each comes with closed-form exp/log/inverse and a membership predicate.
/// AFF1 is the 1-D affine group (x -> a x + b, a > 0), the standard
/// non-unimodular test case. Throws std::invalid_argument on unknown names.
GroupSpec make_group(const std::string& name);

/// Names accepted by make_group.
const std::vector<std::string>& builtin_group_names();

/// Special-orthogonal factor of an invertible matrix via SVD:
/// U diag(1, ..., 1, det(U V^T)) V^T. Always has determinant +1; coincides
/// with (A A^T)^{-1/2} A when det A > 0. Throws SingularInputError when A is
/// numerically singular (perturb the data and retry).
Matrix project_special_orthogonal_matrix(const Matrix& a);
GroupElement project_special_orthogonal(const GroupSpec& so_spec, const Matrix& a);

/// Block extraction/packing for SE(d). se_split validates the homogeneous
/// last row; se_compose checks the rotation block.
PoseParts se_split(const GroupElement& g);
GroupElement se_compose(const GroupSpec& se_spec, const PoseParts& parts);

/// Homogeneous matrix from (R, t) without a spec (helper for IO paths).
Matrix homogeneous_from_parts(const Matrix& rotation, const Vector& translation);

/// SO(3) <-> unit quaternion, Shepperd-style branch selection.
UnitQuaternion so3_to_quat(const GroupElement& r);
UnitQuaternion quat_normalize(const Eigen::Vector4d& q);
GroupElement quat_to_so3(const GroupSpec& so3_spec, const UnitQuaternion& q);
Matrix quat_to_rotation_matrix(const UnitQuaternion& q);

/// Action of SE(d) on R^d: g . x = R_g x + t_g.
Vector group_action_se(const GroupElement& g, const Vector& x);

}  // namespace liemeans
