// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include "liemeans/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "liemeans/detail/kahan.hpp"
#include "liemeans/detail/parallel.hpp"
#include "liemeans/groups.hpp"
#include "liemeans/lie_core.hpp"

namespace liemeans {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

Matrix cholesky_factor(const Matrix& sigma) {
  Eigen::LLT<Matrix> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("sample_concentrated: sigma is not SPD");
  }
  return llt.matrixL();
}

std::size_t draw_index(const std::vector<double>& cumulative, double u) {
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  const std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
  return std::min(idx, cumulative.size() - 1);
}

}  // namespace

EmpiricalDistribution make_empirical(const GroupSpec& spec,
                                     std::vector<GroupElement> samples,
                                     std::vector<double> weights) {
  if (samples.empty()) {
    throw std::invalid_argument("make_empirical: need at least one sample");
  }
  if (weights.empty()) {
    weights.assign(samples.size(), 1.0 / static_cast<double>(samples.size()));
  }
  if (weights.size() != samples.size()) {
    throw std::invalid_argument("make_empirical: weights/samples length mismatch");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("make_empirical: weights must be positive");
    }
    total += w;
  }
  for (double& w : weights) w /= total;

  for (std::size_t i = 0; i < samples.size(); ++i) {
    require_same_group(spec, samples[i].group, "make_empirical");
    const double r = spec.membership_residual(samples[i].mat);
    if (!(r <= 1e-9)) {
      std::ostringstream os;
      os << "make_empirical: sample " << i << " fails membership (residual " << r << ")";
      throw MembershipError(os.str());
    }
  }
  return EmpiricalDistribution{spec, std::move(samples), std::move(weights)};
}

EmpiricalDistribution shift(const EmpiricalDistribution& d, const GroupElement& h,
                            ShiftSide side) {
  require_same_group(d.group, h.group, "shift");
  std::vector<GroupElement> out;
  out.reserve(d.size());
  for (const GroupElement& g : d.samples) {
    out.push_back(side == ShiftSide::Left ? mul(h, g) : mul(g, h));
  }
  return EmpiricalDistribution{d.group, std::move(out), d.weights};
}

EmpiricalDistribution invert(const EmpiricalDistribution& d) {
  std::vector<GroupElement> out;
  out.reserve(d.size());
  for (const GroupElement& g : d.samples) out.push_back(inverse(g));
  return EmpiricalDistribution{d.group, std::move(out), d.weights};
}

EmpiricalDistribution sample_concentrated(const GroupSpec& spec,
                                          const GroupElement& mu,
                                          const Matrix& sigma, int n_samples,
                                          RngSeed seed) {
  require_same_group(spec, mu.group, "sample_concentrated");
  if (n_samples < 1) throw std::invalid_argument("sample_concentrated: n < 1");
  const int n = spec.algebra_dim();
  if (sigma.rows() != n || sigma.cols() != n) {
    throw std::invalid_argument("sample_concentrated: sigma has wrong size");
  }
  const Matrix l = cholesky_factor(sigma);
  CounterRng rng(seed);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    Vector z(n);
    for (int i = 0; i < n; ++i) z[i] = rng.normal();
    out.push_back(mul(mu, group_exp(hat(spec, l * z))));
  }
  return make_empirical(spec, std::move(out));
}

EmpiricalDistribution sample_concentrated_symmetrized(const GroupSpec& spec,
                                                      const GroupElement& mu,
                                                      const Matrix& sigma,
                                                      int n_pairs, RngSeed seed) {
  require_same_group(spec, mu.group, "sample_concentrated_symmetrized");
  if (n_pairs < 1) throw std::invalid_argument("sample_concentrated_symmetrized: n < 1");
  const int n = spec.algebra_dim();
  const Matrix l = cholesky_factor(sigma);
  CounterRng rng(seed);
  std::vector<GroupElement> out;
  out.reserve(2 * static_cast<std::size_t>(n_pairs));
  for (int k = 0; k < n_pairs; ++k) {
    Vector z(n);
    for (int i = 0; i < n; ++i) z[i] = rng.normal();
    const Vector x = l * z;
    out.push_back(mul(mu, group_exp(hat(spec, x))));
    out.push_back(mul(mu, group_exp(hat(spec, -x))));
  }
  return make_empirical(spec, std::move(out));
}

EmpiricalDistribution sample_uniform_haar(const GroupSpec& spec, int n_samples,
                                          RngSeed seed) {
  if (n_samples < 1) throw std::invalid_argument("sample_uniform_haar: n < 1");
  CounterRng rng(seed);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n_samples));
  if (spec.name() == "SO2") {
    for (int k = 0; k < n_samples; ++k) {
      const double theta = -kPi + 2.0 * kPi * rng.uniform();
      Matrix r(2, 2);
      r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
      out.push_back(GroupElement{spec, std::move(r)});
    }
  } else if (spec.name() == "SO3") {
    for (int k = 0; k < n_samples; ++k) {
      Eigen::Vector4d q;
      for (int i = 0; i < 4; ++i) q[i] = rng.normal();
      out.push_back(quat_to_so3(spec, quat_normalize(q)));
    }
  } else {
    throw std::invalid_argument(
        "sample_uniform_haar: normalized Haar sampling is only supported for "
        "the compact groups SO2 and SO3");
  }
  return make_empirical(spec, std::move(out));
}

EmpiricalDistribution product_distribution(const EmpiricalDistribution& d1,
                                           const EmpiricalDistribution& d2,
                                           int n_samples, RngSeed seed) {
  require_same_group(d1.group, d2.group, "product_distribution");
  if (n_samples < 1) throw std::invalid_argument("product_distribution: n < 1");

  std::vector<double> cum1(d1.size()), cum2(d2.size());
  std::partial_sum(d1.weights.begin(), d1.weights.end(), cum1.begin());
  std::partial_sum(d2.weights.begin(), d2.weights.end(), cum2.begin());

  CounterRng rng(seed);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const std::size_t i = draw_index(cum1, rng.uniform());
    const std::size_t j = draw_index(cum2, rng.uniform());
    out.push_back(mul(d1.samples[i], d2.samples[j]));
  }
  return make_empirical(d1.group, std::move(out));
}

Matrix expect_matrix(const EmpiricalDistribution& d,
                     const std::function<Matrix(const GroupElement&)>& phi) {
  const std::size_t n = d.size();
  std::vector<Matrix> values(n);
  std::vector<std::size_t> bad_indices;
  std::mutex bad_mutex;
  std::string bad_message;

  detail::parallel_for(n, [&](std::size_t i) {
    try {
      values[i] = d.weights[i] * phi(d.samples[i]);
    } catch (const DomainError& e) {
      std::scoped_lock lock(bad_mutex);
      bad_indices.push_back(i);
      if (bad_message.empty()) bad_message = e.what();
    }
  });

  if (!bad_indices.empty()) {
    std::sort(bad_indices.begin(), bad_indices.end());
    std::ostringstream os;
    os << "expect_matrix: " << bad_indices.size()
       << " sample(s) failed (first: " << bad_message << ")";
    throw DomainError(os.str(), std::move(bad_indices));
  }

  detail::KahanMatrix acc(values[0].rows(), values[0].cols());
  for (std::size_t i = 0; i < n; ++i) acc.add(values[i]);
  return acc.value();
}

}  // namespace liemeans
