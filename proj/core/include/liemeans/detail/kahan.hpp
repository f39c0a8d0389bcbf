// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace liemeans::detail {

/// Neumaier-compensated accumulator for scalars.
class KahanScalar {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Elementwise compensated accumulator for matrices. Reductions must feed it
/// in a fixed order to keep results reproducible.
class KahanMatrix {
 public:
  explicit KahanMatrix(Eigen::Index rows, Eigen::Index cols)
      : sum_(Eigen::MatrixXd::Zero(rows, cols)),
        comp_(Eigen::MatrixXd::Zero(rows, cols)) {}

  void add(const Eigen::MatrixXd& v) {
    for (Eigen::Index j = 0; j < sum_.cols(); ++j) {
      for (Eigen::Index i = 0; i < sum_.rows(); ++i) {
        const double s = sum_(i, j);
        const double x = v(i, j);
        const double t = s + x;
        if (std::abs(s) >= std::abs(x)) {
          comp_(i, j) += (s - t) + x;
        } else {
          comp_(i, j) += (x - t) + s;
        }
        sum_(i, j) = t;
      }
    }
  }

  Eigen::MatrixXd value() const { return sum_ + comp_; }

 private:
  Eigen::MatrixXd sum_;
  Eigen::MatrixXd comp_;
};

}  // namespace liemeans::detail
