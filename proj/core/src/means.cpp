// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include "liemeans/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "liemeans/detail/kahan.hpp"
#include "liemeans/groups.hpp"
#include "liemeans/lie_core.hpp"

namespace liemeans {

namespace {

// Log coordinates of mu^{-1} g_i for all samples, with DomainErrors
// aggregated into one exception naming the offending indices.
std::vector<Vector> relative_logs(const EmpiricalDistribution& d,
                                  const GroupElement& mu, const char* context) {
  const GroupElement mu_inv = inverse(mu);
  std::vector<Vector> out(d.size());
  std::vector<std::size_t> bad;
  std::string first_message;
  for (std::size_t i = 0; i < d.size(); ++i) {
    try {
      out[i] = group_log(mul(mu_inv, d.samples[i])).coords;
    } catch (const DomainError& e) {
      bad.push_back(i);
      if (first_message.empty()) first_message = e.what();
    }
  }
  if (!bad.empty()) {
    std::ostringstream os;
    os << context << ": " << bad.size()
       << " sample(s) outside the chart of the evaluation point (first: "
       << first_message << ")";
    throw DomainError(os.str(), std::move(bad));
  }
  return out;
}

Vector weighted_vector_sum(const std::vector<Vector>& values,
                           const std::vector<double>& weights) {
  detail::KahanMatrix acc(values[0].size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc.add(weights[i] * values[i]);
  }
  return acc.value().col(0);
}

GroupElement resolve_init(const EmpiricalDistribution& d, const SolverConfig& cfg) {
  switch (cfg.init) {
    case SolverConfig::Init::Identity:
      return identity(d.group);
    case SolverConfig::Init::FirstSample:
      return d.samples.front();
    case SolverConfig::Init::Given:
      if (!cfg.init_point) {
        throw std::invalid_argument("SolverConfig: Init::Given without a point");
      }
      require_same_group(d.group, cfg.init_point->group, "solver init");
      return *cfg.init_point;
    case SolverConfig::Init::Projected: {
      const GroupFamily fam = d.group.family();
      if (fam == GroupFamily::SpecialOrthogonal || fam == GroupFamily::SpecialEuclidean) {
        return projected_mean(d).mean;
      }
      return d.samples.front();  // projection undefined; nearest cheap start
    }
  }
  throw std::logic_error("resolve_init: unhandled init");
}

void check_config(const SolverConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be > 0");
  if (cfg.max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
}

}  // namespace

Matrix euclidean_mean(const EmpiricalDistribution& d) {
  detail::KahanMatrix acc(d.group.ambient_dim(), d.group.ambient_dim());
  for (std::size_t i = 0; i < d.size(); ++i) acc.add(d.weights[i] * d.samples[i].mat);
  return acc.value();
}

MeanReport projected_mean(const EmpiricalDistribution& d) {
  const Matrix mu_e = euclidean_mean(d);
  const GroupFamily fam = d.group.family();
  GroupElement mean = identity(d.group);
  if (fam == GroupFamily::SpecialOrthogonal) {
    mean = project_special_orthogonal(d.group, mu_e);
  } else if (fam == GroupFamily::SpecialEuclidean) {
    const Eigen::Index dd = d.group.ambient_dim() - 1;
    const Matrix rot = project_special_orthogonal_matrix(mu_e.topLeftCorner(dd, dd));
    mean = se_compose(d.group, PoseParts{rot, mu_e.topRightCorner(dd, 1)});
  } else {
    throw std::invalid_argument(
        "projected_mean: defined for SO(d) and SE(d) groups only");
  }
  MeanReport report{mean, "projected", 0, (mean.mat - mu_e).norm(), std::nullopt,
                    true, {}};
  return report;
}

MeanReport log_euclidean_mean(const EmpiricalDistribution& d, const GroupElement& h) {
  require_same_group(d.group, h.group, "log_euclidean_mean");
  const std::vector<Vector> logs = relative_logs(d, h, "log_euclidean_mean");
  const Vector avg = weighted_vector_sum(logs, d.weights);
  MeanReport report{mul(h, group_exp(hat(d.group, avg))),
                    "log-euclidean", 0, 0.0, std::nullopt, true, {}};
  return report;
}

MeanReport group_theoretic_mean(const EmpiricalDistribution& d,
                                const SolverConfig& cfg) {
  check_config(cfg);
  GroupElement mu = resolve_init(d, cfg);
  GroupElement best = mu;
  double best_residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;

  for (int k = 0; k < cfg.max_iter; ++k) {
    const std::vector<Vector> logs = relative_logs(d, mu, "group_theoretic_mean");
    const Vector r = weighted_vector_sum(logs, d.weights);
    const double rnorm = r.norm();
    iterations = k + 1;
    if (rnorm < best_residual) {
      best_residual = rnorm;
      best = mu;
    }
    if (rnorm < cfg.tol) {
      converged = true;
      break;
    }
    mu = mul(mu, group_exp(hat(d.group, r)));
  }

  MeanReport report{best, "group", iterations, best_residual, std::nullopt,
                    converged, {}};

  // Right-handed form of the zero-mean-log condition; ties to the left form
  // through Ad_mu.
  try {
    const GroupElement mu_inv = inverse(best);
    std::vector<Vector> right_logs(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      right_logs[i] = group_log(mul(d.samples[i], mu_inv)).coords;
    }
    const Vector r_right = weighted_vector_sum(right_logs, d.weights);
    const std::vector<Vector> left_logs = relative_logs(d, best, "group_theoretic_mean");
    const Vector r_left = weighted_vector_sum(left_logs, d.weights);
    report.diagnostics["right_residual"] = r_right.norm();
    report.diagnostics["right_consistency"] =
        (Ad_matrix(best) * r_left - r_right).norm();
  } catch (const DomainError&) {
    // right-form diagnostics unavailable outside the chart; not an error
  }
  return report;
}

MeanReport frechet_mean(const EmpiricalDistribution& d, const DistanceKind& kind,
                        const SolverConfig& cfg) {
  check_config(cfg);
  const int n = d.group.algebra_dim();

  const auto cost_at = [&](const GroupElement& h) -> double {
    detail::KahanScalar acc;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double dist = distance(kind, h, d.samples[i]);
      acc.add(d.weights[i] * dist * dist);
    }
    return acc.value();
  };

  GroupElement h = resolve_init(d, cfg);
  double cost = cost_at(h);
  constexpr double kFdStep = 1e-6;
  int iterations = 0;
  bool converged = false;
  double last_update = std::numeric_limits<double>::infinity();
  double grad_norm = 0.0;
  Vector prev_grad;
  Vector prev_step;
  double alpha_init = 1.0;

  for (int k = 0; k < cfg.max_iter; ++k) {
    iterations = k + 1;

    Vector grad(n);
    for (int j = 0; j < n; ++j) {
      Vector e = Vector::Zero(n);
      e[j] = kFdStep;
      const double cp = cost_at(mul(h, group_exp(hat(d.group, e))));
      const double cm = cost_at(mul(h, group_exp(hat(d.group, -e))));
      grad[j] = (cp - cm) / (2.0 * kFdStep);
    }
    grad_norm = grad.norm();

    // central differences with step 1e-6 carry O(1e-10 * cost) noise; below
    // that there is nothing left to descend
    if (grad_norm < 1e-9 * (1.0 + std::abs(cost))) {
      converged = true;
      last_update = 0.0;
      break;
    }

    // Barzilai-Borwein trial step (plain steepest descent zigzags forever on
    // anisotropic costs); chart mismatch between iterates is second order
    if (prev_grad.size() == n) {
      const Vector y = grad - prev_grad;
      const double sy = prev_step.dot(y);
      const double yy = y.squaredNorm();
      if (sy > 0.0 && yy > 0.0) alpha_init = std::min(sy / yy, 1e3);
    }

    double alpha = alpha_init;
    bool accepted = false;
    for (int back = 0; back < 60; ++back) {
      GroupElement h_try = mul(h, group_exp(hat(d.group, -alpha * grad)));
      double cost_try;
      try {
        cost_try = cost_at(h_try);
      } catch (const DomainError&) {
        alpha *= 0.5;
        continue;
      }
      if (cost_try <= cost - 1e-4 * alpha * grad_norm * grad_norm) {
        prev_step = -alpha * grad;
        prev_grad = grad;
        h = std::move(h_try);
        cost = cost_try;
        last_update = alpha * grad_norm;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      // Armijo could not make progress beyond rounding; treat as stationary.
      converged = true;
      last_update = 0.0;
      break;
    }
    if (last_update < cfg.tol) {
      converged = true;
      break;
    }
  }

  MeanReport report{h, "frechet", iterations, last_update, cost, converged, {}};
  report.diagnostics["grad_norm"] = grad_norm;
  return report;
}

MeanReport karcher_mean(const EmpiricalDistribution& d, const InnerProduct& ip,
                        const SolverConfig& cfg, const ShootConfig& shoot) {
  check_config(cfg);
  require_same_group(d.group, ip.group(), "karcher_mean");
  GroupElement mu = resolve_init(d, cfg);
  GroupElement best = mu;
  double best_residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;

  for (int k = 0; k < cfg.max_iter; ++k) {
    detail::KahanMatrix acc(d.group.algebra_dim(), 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
      acc.add(d.weights[i] * riemannian_log(ip, mu, d.samples[i], shoot).coords);
    }
    const Vector r = acc.value().col(0);
    const double rnorm = r.norm();
    iterations = k + 1;
    if (rnorm < best_residual) {
      best_residual = rnorm;
      best = mu;
    }
    if (rnorm < cfg.tol) {
      converged = true;
      break;
    }
    mu = riemannian_exp(ip, mu, hat(d.group, r), shoot);
  }
  return MeanReport{best, "karcher", iterations, best_residual, std::nullopt,
                    converged, {}};
}

MeanReport quaternion_projected_mean(const EmpiricalDistribution& d,
                                     bool hemisphere_align) {
  if (d.group.name() != "SO3") {
    throw std::invalid_argument("quaternion_projected_mean: SO(3) only");
  }
  Eigen::Vector4d sum = Eigen::Vector4d::Zero();
  Eigen::Vector4d q_ref = Eigen::Vector4d::Zero();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Eigen::Vector4d q = so3_to_quat(d.samples[i]).q;
    if (i == 0) q_ref = q;
    if (hemisphere_align && q.dot(q_ref) < 0.0) q = -q;
    sum += d.weights[i] * q;
  }
  const double sum_norm = sum.norm();
  if (sum_norm < 1e-8) {
    throw NearZeroSumError(
        "quaternion_projected_mean: weighted quaternion sum is numerically "
        "zero; antipodal representatives cancelled");
  }
  MeanReport report{quat_to_so3(d.group, quat_normalize(sum)),
                    "quat", 0, 0.0, std::nullopt, true, {}};
  report.diagnostics["quat_sum_norm"] = sum_norm;
  return report;
}

double cost_L(const EmpiricalDistribution& d, const InnerProduct& ip,
              const GroupElement& h) {
  require_same_group(d.group, ip.group(), "cost_L");
  require_same_group(d.group, h.group, "cost_L");
  detail::KahanScalar acc;
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < d.size(); ++i) {
    try {
      const Vector z = group_log(mul(inverse(d.samples[i]), h)).coords;
      acc.add(d.weights[i] * z.dot(ip.w() * z));
    } catch (const DomainError&) {
      bad.push_back(i);
    }
  }
  if (!bad.empty()) {
    throw DomainError("cost_L: sample(s) outside the chart of h", std::move(bad));
  }
  return acc.value();
}

Vector cost_L_gradient(const EmpiricalDistribution& d, const InnerProduct& ip,
                       const GroupElement& h) {
  require_same_group(d.group, ip.group(), "cost_L_gradient");
  require_same_group(d.group, h.group, "cost_L_gradient");
  const int n = d.group.algebra_dim();
  detail::KahanMatrix acc(n, 1);
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < d.size(); ++i) {
    try {
      const Vector z = group_log(mul(inverse(d.samples[i]), h)).coords;
      const Matrix jac = jacobian_log_from_ad(ad_matrix_coords(d.group, z));
      acc.add(2.0 * d.weights[i] * (jac.transpose() * (ip.w() * z)));
    } catch (const DomainError&) {
      bad.push_back(i);
    }
  }
  if (!bad.empty()) {
    throw DomainError("cost_L_gradient: sample(s) outside the chart of h",
                      std::move(bad));
  }
  return acc.value().col(0);
}

std::vector<MeanReport> group_mean_multistart(const EmpiricalDistribution& d,
                                              const SolverConfig& cfg, int k,
                                              RngSeed seed) {
  std::vector<GroupElement> starts;
  starts.push_back(identity(d.group));
  const GroupFamily fam = d.group.family();
  if (fam == GroupFamily::SpecialOrthogonal || fam == GroupFamily::SpecialEuclidean) {
    starts.push_back(projected_mean(d).mean);
  }
  if (fam == GroupFamily::SpecialOrthogonal && k > 0) {
    const EmpiricalDistribution haar = sample_uniform_haar(d.group, k, seed);
    for (const GroupElement& g : haar.samples) starts.push_back(g);
  } else if (k > 0) {
    // no Haar measure to draw from; reuse sample points as extra starts
    CounterRng rng(seed);
    for (int i = 0; i < k; ++i) {
      const std::size_t idx = static_cast<std::size_t>(rng.next_u64() % d.size());
      starts.push_back(d.samples[idx]);
    }
  }

  std::vector<MeanReport> out;
  for (const GroupElement& start : starts) {
    SolverConfig local = cfg;
    local.init = SolverConfig::Init::Given;
    local.init_point = start;
    try {
      out.push_back(group_theoretic_mean(d, local));
    } catch (const DomainError&) {
      // start's chart does not contain the samples; skip this start
    }
  }
  if (out.empty()) {
    throw DomainError("group_mean_multistart: no start had all samples in its chart");
  }
  return out;
}

MeanReport select_min_cost(const EmpiricalDistribution& d, const InnerProduct& ip,
                           const std::vector<MeanReport>& candidates) {
  const MeanReport* best = nullptr;
  double best_cost = std::numeric_limits<double>::infinity();
  for (const MeanReport& r : candidates) {
    if (!r.converged) continue;
    double c;
    try {
      c = cost_L(d, ip, r.mean);
    } catch (const DomainError&) {
      continue;
    }
    if (c < best_cost) {
      best_cost = c;
      best = &r;
    }
  }
  if (best == nullptr) {
    throw NonConvergenceError("select_min_cost: no converged candidate", 0.0, 0);
  }
  MeanReport out = *best;
  out.cost = best_cost;
  return out;
}

}  // namespace liemeans
