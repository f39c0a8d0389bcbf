// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include "liemeans/covariance.hpp"

#include <cmath>

#include "liemeans/detail/kahan.hpp"
#include "liemeans/lie_core.hpp"

namespace liemeans {

namespace {

Matrix inverse_spd(const Matrix& sigma) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
  if (es.eigenvalues().minCoeff() <= 1e-12) {
    throw SingularCovarianceError(
        "sample covariance is singular (smallest eigenvalue <= 1e-12)");
  }
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
         es.eigenvectors().transpose();
}

InnerProduct covariance_weight(const EmpiricalDistribution& d, const GroupElement& mu) {
  const CovReport cov = group_covariance(d, mu);
  Matrix w = inverse_spd(cov.matrix);
  w = 0.5 * (w + w.transpose());  // symmetrize roundoff
  return InnerProduct::make(d.group, std::move(w));
}

}  // namespace

const char* to_string(CovReport::Kind kind) {
  switch (kind) {
    case CovReport::Kind::EuclideanExtrinsic:
      return "EuclideanExtrinsic";
    case CovReport::Kind::GroupTheoretic:
      return "GroupTheoretic";
    case CovReport::Kind::Karcher:
      return "Karcher";
  }
  return "?";
}

CovReport euclidean_covariance(const EmpiricalDistribution& d) {
  const Matrix mu_e = euclidean_mean(d);
  const Eigen::Index m2 = mu_e.size();
  detail::KahanMatrix acc(m2, m2);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Matrix delta = d.samples[i].mat - mu_e;
    const Vector v = Eigen::Map<const Vector>(delta.data(), delta.size());
    acc.add(d.weights[i] * (v * v.transpose()));
  }
  CovReport report;
  report.kind = CovReport::Kind::EuclideanExtrinsic;
  report.matrix = acc.value();
  report.variance = report.matrix.trace();
  // off-group anchor; keep the raw average for reference
  report.anchor = GroupElement{d.group, mu_e};
  return report;
}

double frechet_variance(const EmpiricalDistribution& d, const DistanceKind& kind,
                        const GroupElement& mu) {
  detail::KahanScalar acc;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double dist = distance(kind, mu, d.samples[i]);
    acc.add(d.weights[i] * dist * dist);
  }
  return acc.value();
}

CovReport group_covariance(const EmpiricalDistribution& d, const GroupElement& mu) {
  require_same_group(d.group, mu.group, "group_covariance");
  const int n = d.group.algebra_dim();
  const GroupElement mu_inv = inverse(mu);
  detail::KahanMatrix acc(n, n);
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < d.size(); ++i) {
    try {
      const Vector z = group_log(mul(mu_inv, d.samples[i])).coords;
      acc.add(d.weights[i] * (z * z.transpose()));
    } catch (const DomainError&) {
      bad.push_back(i);
    }
  }
  if (!bad.empty()) {
    throw DomainError("group_covariance: sample(s) outside the chart of the anchor",
                      std::move(bad));
  }
  CovReport report;
  report.kind = CovReport::Kind::GroupTheoretic;
  report.matrix = acc.value();
  report.variance = report.matrix.trace();
  report.anchor = mu;
  return report;
}

CovReport karcher_covariance(const EmpiricalDistribution& d, const InnerProduct& ip,
                             const GroupElement& mu, const ShootConfig& shoot) {
  require_same_group(d.group, mu.group, "karcher_covariance");
  require_same_group(d.group, ip.group(), "karcher_covariance");
  const int n = d.group.algebra_dim();
  detail::KahanMatrix acc(n, n);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Vector z = riemannian_log(ip, mu, d.samples[i], shoot).coords;
    acc.add(d.weights[i] * (z * z.transpose()));
  }
  CovReport report;
  report.kind = CovReport::Kind::Karcher;
  report.matrix = acc.value();
  report.variance = report.matrix.trace();
  report.anchor = mu;
  return report;
}

std::pair<GroupElement, Matrix> propagate(const GroupElement& mu1, const Matrix& sigma1,
                                          const GroupElement& mu2, const Matrix& sigma2) {
  require_same_group(mu1.group, mu2.group, "propagate");
  if (!is_unimodular(mu1.group)) {
    throw std::invalid_argument(
        "propagate: the first-order propagation rule requires a unimodular group");
  }
  const int n = mu1.group.algebra_dim();
  if (sigma1.rows() != n || sigma1.cols() != n || sigma2.rows() != n ||
      sigma2.cols() != n) {
    throw std::invalid_argument("propagate: covariance has wrong size");
  }
  const Matrix ad2_inv = Ad_matrix(inverse(mu2));
  Matrix sigma12 = ad2_inv * sigma1 * ad2_inv.transpose() + sigma2;
  sigma12 = 0.5 * (sigma12 + sigma12.transpose());
  return {mul(mu1, mu2), std::move(sigma12)};
}

double weighted_cost(const EmpiricalDistribution& d, const GroupElement& mu) {
  return cost_L(d, covariance_weight(d, mu), mu);
}

Vector weighted_cost_gradient(const EmpiricalDistribution& d, const GroupElement& mu) {
  return cost_L_gradient(d, covariance_weight(d, mu), mu);
}

}  // namespace liemeans
