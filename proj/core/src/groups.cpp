// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include "liemeans/groups.hpp"

#include <cmath>
#include <limits>

namespace liemeans {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kBranchGuard = 1e-6;   // reject rotations this close to pi
constexpr double kSmallAngle = 1e-5;    // Taylor fallback threshold

Eigen::Matrix3d skew3(const Eigen::Vector3d& v) {
  Eigen::Matrix3d s;
  s << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return s;
}

// --- SO(2) -----------------------------------------------------------------

Matrix so2_exp(const Matrix& x) {
  const double theta = x(1, 0);
  Matrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

Matrix so2_log(const Matrix& g) {
  const double theta = std::atan2(g(1, 0), g(0, 0));
  if (std::abs(theta) >= kPi - kBranchGuard) {
    throw DomainError("SO(2) log: rotation angle at the principal-branch boundary");
  }
  Matrix x(2, 2);
  x << 0, -theta, theta, 0;
  return x;
}

double so_membership_residual(const Matrix& g) {
  const Matrix gram = g.transpose() * g - Matrix::Identity(g.rows(), g.cols());
  const double ortho = gram.cwiseAbs().maxCoeff();
  const double det = g.determinant();
  return std::max(ortho, std::abs(det - 1.0));
}

// --- SO(3) -----------------------------------------------------------------

// 2 sin^2(theta/2), free of the 1 - cos cancellation near zero
double one_minus_cos(double theta) {
  const double s = std::sin(0.5 * theta);
  return 2.0 * s * s;
}

Eigen::Matrix3d so3_exp_vec(const Eigen::Vector3d& omega) {
  const double theta2 = omega.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Eigen::Matrix3d k = skew3(omega);
  double a, b;
  if (theta < kSmallAngle) {
    a = 1.0 - theta2 / 6.0;
    b = 0.5 - theta2 / 24.0;
  } else {
    a = std::sin(theta) / theta;
    b = one_minus_cos(theta) / theta2;
  }
  return Eigen::Matrix3d::Identity() + a * k + b * k * k;
}

Eigen::Vector3d so3_log_vec(const Eigen::Matrix3d& r) {
  const double cos_theta = std::min(1.0, std::max(-1.0, (r.trace() - 1.0) / 2.0));
  Eigen::Vector3d w;  // = 2 sin(theta) * axis
  w << r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1);
  const double wn = w.norm();

  // near pi the trace loses half the digits; the skew part pins sin(theta)
  double theta;
  if (cos_theta < -0.99) {
    theta = kPi - std::asin(std::min(1.0, 0.5 * wn));
  } else {
    theta = std::acos(cos_theta);
  }
  if (theta >= kPi - kBranchGuard) {
    throw DomainError("SO(3) log: rotation angle within 1e-6 of pi; principal branch is not unique");
  }
  if (theta < kSmallAngle) {
    return 0.5 * (1.0 + theta * theta / 6.0) * w;
  }
  return (theta / wn) * w;  // theta * unit axis
}

Matrix so3_exp(const Matrix& x) {
  const Eigen::Vector3d omega(x(2, 1), x(0, 2), x(1, 0));
  return so3_exp_vec(omega);
}

Matrix so3_log(const Matrix& g) {
  return skew3(so3_log_vec(g));
}

// --- SE(2) -----------------------------------------------------------------

Matrix se2_exp(const Matrix& x) {
  const double theta = x(1, 0);
  const Eigen::Vector2d v(x(0, 2), x(1, 2));
  double a, b;  // V = a I + b J with J the 2-D rotation generator
  if (std::abs(theta) < kSmallAngle) {
    a = 1.0 - theta * theta / 6.0;
    b = theta / 2.0 - theta * theta * theta / 24.0;
  } else {
    a = std::sin(theta) / theta;
    b = one_minus_cos(theta) / theta;
  }
  Eigen::Matrix2d vmat;
  vmat << a, -b, b, a;
  Matrix g = Matrix::Identity(3, 3);
  g(0, 0) = std::cos(theta);
  g(0, 1) = -std::sin(theta);
  g(1, 0) = std::sin(theta);
  g(1, 1) = std::cos(theta);
  g.block<2, 1>(0, 2) = vmat * v;
  return g;
}

Matrix se2_log(const Matrix& g) {
  const double theta = std::atan2(g(1, 0), g(0, 0));
  if (std::abs(theta) >= kPi - kBranchGuard) {
    throw DomainError("SE(2) log: rotation part at the principal-branch boundary");
  }
  double a, b;
  if (std::abs(theta) < kSmallAngle) {
    a = 1.0 - theta * theta / 6.0;
    b = theta / 2.0 - theta * theta * theta / 24.0;
  } else {
    a = std::sin(theta) / theta;
    b = one_minus_cos(theta) / theta;
  }
  Eigen::Matrix2d vinv;
  const double denom = a * a + b * b;
  vinv << a, b, -b, a;
  vinv /= denom;
  const Eigen::Vector2d v = vinv * g.block<2, 1>(0, 2);
  Matrix x = Matrix::Zero(3, 3);
  x(0, 1) = -theta;
  x(1, 0) = theta;
  x(0, 2) = v.x();
  x(1, 2) = v.y();
  return x;
}

// --- SE(3) -----------------------------------------------------------------

Matrix se3_exp(const Matrix& x) {
  const Eigen::Vector3d omega(x(2, 1), x(0, 2), x(1, 0));
  const Eigen::Vector3d v(x(0, 3), x(1, 3), x(2, 3));
  const double theta2 = omega.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Eigen::Matrix3d k = skew3(omega);
  double b, c;
  if (theta < kSmallAngle) {
    b = 0.5 - theta2 / 24.0;
    c = 1.0 / 6.0 - theta2 / 120.0;
  } else {
    b = one_minus_cos(theta) / theta2;
    c = (theta - std::sin(theta)) / (theta2 * theta);
  }
  const Eigen::Matrix3d vmat = Eigen::Matrix3d::Identity() + b * k + c * k * k;
  Matrix g = Matrix::Identity(4, 4);
  g.block<3, 3>(0, 0) = so3_exp_vec(omega);
  g.block<3, 1>(0, 3) = vmat * v;
  return g;
}

Matrix se3_log(const Matrix& g) {
  const Eigen::Matrix3d r = g.block<3, 3>(0, 0);
  const Eigen::Vector3d omega = so3_log_vec(r);  // throws at the branch boundary
  const double theta2 = omega.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Eigen::Matrix3d k = skew3(omega);
  double d;
  if (theta < kSmallAngle) {
    d = 1.0 / 12.0 + theta2 / 720.0;
  } else {
    const double a = std::sin(theta) / theta;
    const double b = one_minus_cos(theta) / theta2;
    d = (1.0 - a / (2.0 * b)) / theta2;
  }
  const Eigen::Matrix3d vinv = Eigen::Matrix3d::Identity() - 0.5 * k + d * k * k;
  const Eigen::Vector3d v = vinv * g.block<3, 1>(0, 3);
  Matrix x = Matrix::Zero(4, 4);
  x.block<3, 3>(0, 0) = skew3(omega);
  x.block<3, 1>(0, 3) = v;
  return x;
}

double se_membership_residual(const Matrix& g) {
  const Eigen::Index d = g.rows() - 1;
  double r = so_membership_residual(g.topLeftCorner(d, d));
  for (Eigen::Index j = 0; j < d; ++j) r = std::max(r, std::abs(g(d, j)));
  r = std::max(r, std::abs(g(d, d) - 1.0));
  return r;
}

Matrix se_inverse(const Matrix& g) {
  const Eigen::Index d = g.rows() - 1;
  Matrix out = Matrix::Identity(g.rows(), g.cols());
  out.topLeftCorner(d, d) = g.topLeftCorner(d, d).transpose();
  out.topRightCorner(d, 1) = -g.topLeftCorner(d, d).transpose() * g.topRightCorner(d, 1);
  return out;
}

// --- AFF(1): x -> a x + b, a > 0 --------------------------------------------

double expm1_over_x(double x) {
  if (std::abs(x) < 1e-12) return 1.0 + 0.5 * x;
  return std::expm1(x) / x;
}

Matrix aff1_exp(const Matrix& x) {
  const double a = x(0, 0);
  const double b = x(0, 1);
  Matrix g = Matrix::Identity(2, 2);
  g(0, 0) = std::exp(a);
  g(0, 1) = b * expm1_over_x(a);
  return g;
}

Matrix aff1_log(const Matrix& g) {
  const double a = g(0, 0);
  if (a <= 0.0) {
    throw DomainError("AFF1 log: scale entry must be positive");
  }
  const double x = std::log(a);
  Matrix out = Matrix::Zero(2, 2);
  out(0, 0) = x;
  out(0, 1) = g(0, 1) / expm1_over_x(x);
  return out;
}

double aff1_membership_residual(const Matrix& g) {
  if (g(0, 0) <= 0.0) return std::numeric_limits<double>::infinity();
  return std::max(std::abs(g(1, 0)), std::abs(g(1, 1) - 1.0));
}

// --- basis construction ------------------------------------------------------

std::vector<Matrix> so3_basis() {
  std::vector<Matrix> basis(3, Matrix::Zero(3, 3));
  basis[0] << 0, 0, 0, 0, 0, -1, 0, 1, 0;
  basis[1] << 0, 0, 1, 0, 0, 0, -1, 0, 0;
  basis[2] << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  return basis;
}

GroupSpec build_so2() {
  std::vector<Matrix> basis(1, Matrix::Zero(2, 2));
  basis[0] << 0, -1, 1, 0;
  ClosedForms forms;
  forms.exp = so2_exp;
  forms.log = so2_log;
  forms.inverse = [](const Matrix& g) { return Matrix(g.transpose()); };
  forms.membership_residual = so_membership_residual;
  return GroupSpec::make("SO2", 2, 1, std::move(basis), {}, std::move(forms),
                         GroupFamily::SpecialOrthogonal, 2);
}

GroupSpec build_so3() {
  ClosedForms forms;
  forms.exp = so3_exp;
  forms.log = so3_log;
  forms.inverse = [](const Matrix& g) { return Matrix(g.transpose()); };
  forms.membership_residual = so_membership_residual;
  return GroupSpec::make("SO3", 3, 3, so3_basis(), {}, std::move(forms),
                         GroupFamily::SpecialOrthogonal, 3);
}

GroupSpec build_se2() {
  // ordering: rotation first, then translations
  std::vector<Matrix> basis(3, Matrix::Zero(3, 3));
  basis[0](0, 1) = -1;
  basis[0](1, 0) = 1;
  basis[1](0, 2) = 1;
  basis[2](1, 2) = 1;
  ClosedForms forms;
  forms.exp = se2_exp;
  forms.log = se2_log;
  forms.inverse = se_inverse;
  forms.membership_residual = se_membership_residual;
  return GroupSpec::make("SE2", 3, 3, std::move(basis), {}, std::move(forms),
                         GroupFamily::SpecialEuclidean, 2);
}

GroupSpec build_se3() {
  // ordering: rotational coords 1-3, translational 4-6
  std::vector<Matrix> basis(6, Matrix::Zero(4, 4));
  const std::vector<Matrix> rot = so3_basis();
  for (int i = 0; i < 3; ++i) basis[static_cast<std::size_t>(i)].block<3, 3>(0, 0) = rot[static_cast<std::size_t>(i)];
  basis[3](0, 3) = 1;
  basis[4](1, 3) = 1;
  basis[5](2, 3) = 1;
  ClosedForms forms;
  forms.exp = se3_exp;
  forms.log = se3_log;
  forms.inverse = se_inverse;
  forms.membership_residual = se_membership_residual;
  return GroupSpec::make("SE3", 4, 6, std::move(basis), {}, std::move(forms),
                         GroupFamily::SpecialEuclidean, 3);
}

GroupSpec build_aff1() {
  std::vector<Matrix> basis(2, Matrix::Zero(2, 2));
  basis[0](0, 0) = 1;  // scale generator; [E1, E2] = E2
  basis[1](0, 1) = 1;  // offset generator
  ClosedForms forms;
  forms.exp = aff1_exp;
  forms.log = aff1_log;
  forms.inverse = [](const Matrix& g) {
    Matrix out = Matrix::Identity(2, 2);
    out(0, 0) = 1.0 / g(0, 0);
    out(0, 1) = -g(0, 1) / g(0, 0);
    return out;
  };
  forms.membership_residual = aff1_membership_residual;
  return GroupSpec::make("AFF1", 2, 2, std::move(basis), {}, std::move(forms),
                         GroupFamily::Affine1D, 1);
}

}  // namespace

GroupSpec make_group(const std::string& name) {
  if (name == "SO2") {
    static const GroupSpec spec = build_so2();
    return spec;
  }
  if (name == "SO3") {
    static const GroupSpec spec = build_so3();
    return spec;
  }
  if (name == "SE2") {
    static const GroupSpec spec = build_se2();
    return spec;
  }
  if (name == "SE3") {
    static const GroupSpec spec = build_se3();
    return spec;
  }
  if (name == "AFF1") {
    static const GroupSpec spec = build_aff1();
    return spec;
  }
  throw std::invalid_argument("make_group: unknown group name '" + name +
                              "' (expected SO2, SO3, SE2, SE3 or AFF1)");
}

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names = {"SO2", "SO3", "SE2", "SE3", "AFF1"};
  return names;
}

Matrix project_special_orthogonal_matrix(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues().minCoeff();
  if (smin <= 1e-12) {
    throw SingularInputError(
        "project_special_orthogonal: input is numerically singular; perturb "
        "the data and retry");
  }
  const Matrix uvt = svd.matrixU() * svd.matrixV().transpose();
  Vector diag = Vector::Ones(a.rows());
  diag[a.rows() - 1] = uvt.determinant() > 0 ? 1.0 : -1.0;
  return svd.matrixU() * diag.asDiagonal() * svd.matrixV().transpose();
}

GroupElement project_special_orthogonal(const GroupSpec& so_spec, const Matrix& a) {
  return make_element(so_spec, project_special_orthogonal_matrix(a));
}

PoseParts se_split(const GroupElement& g) {
  if (g.group.family() != GroupFamily::SpecialEuclidean) {
    throw std::invalid_argument("se_split: not an SE(d) group");
  }
  const Eigen::Index d = g.mat.rows() - 1;
  for (Eigen::Index j = 0; j < d; ++j) {
    if (std::abs(g.mat(d, j)) > 1e-9) {
      throw MembershipError("se_split: malformed last row");
    }
  }
  if (std::abs(g.mat(d, d) - 1.0) > 1e-9) {
    throw MembershipError("se_split: malformed last row");
  }
  return PoseParts{g.mat.topLeftCorner(d, d), g.mat.topRightCorner(d, 1)};
}

Matrix homogeneous_from_parts(const Matrix& rotation, const Vector& translation) {
  const Eigen::Index d = rotation.rows();
  Matrix g = Matrix::Identity(d + 1, d + 1);
  g.topLeftCorner(d, d) = rotation;
  g.topRightCorner(d, 1) = translation;
  return g;
}

GroupElement se_compose(const GroupSpec& se_spec, const PoseParts& parts) {
  if (se_spec.family() != GroupFamily::SpecialEuclidean) {
    throw std::invalid_argument("se_compose: not an SE(d) group");
  }
  return make_element(se_spec, homogeneous_from_parts(parts.rotation, parts.translation));
}

UnitQuaternion quat_normalize(const Eigen::Vector4d& q) {
  const double norm = q.norm();
  if (norm < 1e-12) {
    throw NearZeroSumError("quaternion: cannot normalize a near-zero vector");
  }
  return UnitQuaternion{q / norm};
}

UnitQuaternion so3_to_quat(const GroupElement& r) {
  const Matrix& m = r.mat;
  const double trace = m.trace();
  Eigen::Vector4d q;  // (w, x, y, z)
  // Shepperd: branch on the largest of trace / diagonal entries
  if (trace > m(0, 0) && trace > m(1, 1) && trace > m(2, 2)) {
    const double s = std::sqrt(1.0 + trace) * 2.0;
    q << 0.25 * s, (m(2, 1) - m(1, 2)) / s, (m(0, 2) - m(2, 0)) / s,
        (m(1, 0) - m(0, 1)) / s;
  } else if (m(0, 0) > m(1, 1) && m(0, 0) > m(2, 2)) {
    const double s = std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2)) * 2.0;
    q << (m(2, 1) - m(1, 2)) / s, 0.25 * s, (m(0, 1) + m(1, 0)) / s,
        (m(0, 2) + m(2, 0)) / s;
  } else if (m(1, 1) > m(2, 2)) {
    const double s = std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2)) * 2.0;
    q << (m(0, 2) - m(2, 0)) / s, (m(0, 1) + m(1, 0)) / s, 0.25 * s,
        (m(1, 2) + m(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1)) * 2.0;
    q << (m(1, 0) - m(0, 1)) / s, (m(0, 2) + m(2, 0)) / s,
        (m(1, 2) + m(2, 1)) / s, 0.25 * s;
  }
  return quat_normalize(q);
}

Matrix quat_to_rotation_matrix(const UnitQuaternion& uq) {
  const double w = uq.q[0], x = uq.q[1], y = uq.q[2], z = uq.q[3];
  Matrix m(3, 3);
  m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return m;
}

GroupElement quat_to_so3(const GroupSpec& so3_spec, const UnitQuaternion& q) {
  return make_element(so3_spec, quat_to_rotation_matrix(q));
}

Vector group_action_se(const GroupElement& g, const Vector& x) {
  const PoseParts parts = se_split(g);
  if (x.size() != parts.translation.size()) {
    throw std::invalid_argument("group_action_se: point has wrong dimension");
  }
  return parts.rotation * x + parts.translation;
}

}  // namespace liemeans
