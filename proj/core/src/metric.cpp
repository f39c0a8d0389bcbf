// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include "liemeans/metric.hpp"

#include <cmath>
#include <sstream>

#include "liemeans/groups.hpp"
#include "liemeans/lie_core.hpp"
#include "liemeans/rng.hpp"

namespace liemeans {

namespace {

// Residuals of the three bi-invariance conditions, normalized by ||W||.
AdInvarianceReport evaluate_conditions(const GroupSpec& spec, const Matrix& w) {
  const int n = spec.algebra_dim();
  const double w_scale = w.cwiseAbs().maxCoeff();
  AdInvarianceReport report;

  // (1) ad_{E_i}^T W + W ad_{E_i} = 0 for every basis vector.
  double rb = 0.0;
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e[i] = 1.0;
    const Matrix ad = ad_matrix_coords(spec, e);
    rb = std::max(rb, (ad.transpose() * w + w * ad).cwiseAbs().maxCoeff());
  }
  report.residual_skew_isometry = rb / w_scale;

  // (2) ad_{x^}^T W x = 0 on pseudo-random unit draws.
  CounterRng rng(RngSeed{0x5eedULL});
  double re = 0.0;
  for (int trial = 0; trial < 64; ++trial) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.normal();
    x.normalize();
    const Matrix ad = ad_matrix_coords(spec, x);
    re = std::max(re, (ad.transpose() * w * x).cwiseAbs().maxCoeff());
  }
  report.residual_random_probe = re / w_scale;

  // (3) each slab (C_l)_{ij} = C(i,l,k) W(k,j) is skew-symmetric.
  const StructureConstants& c = spec.structure_constants();
  double rf = 0.0;
  for (int l = 0; l < n; ++l) {
    Matrix slab(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += c(i, l, k) * w(k, j);
        slab(i, j) = s;
      }
    }
    rf = std::max(rf, (slab + slab.transpose()).cwiseAbs().maxCoeff());
  }
  report.residual_slab_symmetry = rf / w_scale;

  constexpr double kTol = 1e-10;
  const bool vb = report.residual_skew_isometry < kTol;
  const bool ve = report.residual_random_probe < kTol;
  const bool vf = report.residual_slab_symmetry < kTol;
  if (vb != ve || vb != vf) {
    std::ostringstream os;
    os << "is_ad_invariant: equivalent conditions disagree (residuals "
       << report.residual_skew_isometry << ", " << report.residual_random_probe
       << ", " << report.residual_slab_symmetry << ")";
    throw std::logic_error(os.str());
  }
  report.invariant = vb;
  if (!vb) {
    if (!(report.residual_skew_isometry < kTol)) {
      report.failing_condition = "ad is not a skew-isometry of W";
    } else if (!(report.residual_random_probe < kTol)) {
      report.failing_condition = "ad_x^T W x != 0 on a random draw";
    } else {
      report.failing_condition = "contracted structure-constant slab is not skew";
    }
  }
  return report;
}

double chordal_distance(const GroupElement& g, const GroupElement& h) {
  return (g.mat - h.mat).norm();
}

double log_norm_distance(const InnerProduct& ip, const GroupElement& g,
                         const GroupElement& h) {
  const AlgebraElement z = group_log(mul(inverse(g), h));
  return ip.norm(z.coords);
}

double body_se_distance(const GroupElement& g, const GroupElement& h, double mass) {
  const PoseParts pg = se_split(g);
  const PoseParts ph = se_split(h);
  const double dr2 = (pg.rotation - ph.rotation).squaredNorm();
  const double dt2 = (pg.translation - ph.translation).squaredNorm();
  return std::sqrt(dr2 + mass * dt2);
}

double product_se_distance(const GroupElement& g, const GroupElement& h) {
  const PoseParts pg = se_split(g);
  const PoseParts ph = se_split(h);
  const GroupSpec so = make_group(pg.rotation.rows() == 3 ? "SO3" : "SO2");
  const AlgebraElement rel =
      group_log(make_element(so, pg.rotation.transpose() * ph.rotation));
  const double dr2 = rel.mat.squaredNorm();  // Frobenius norm of the log matrix
  const double dt2 = (pg.translation - ph.translation).squaredNorm();
  return std::sqrt(dr2 + dt2);
}

}  // namespace

InnerProduct InnerProduct::make(const GroupSpec& spec, Matrix w) {
  const int n = spec.algebra_dim();
  if (w.rows() != n || w.cols() != n) {
    throw std::invalid_argument("InnerProduct: W has wrong size");
  }
  if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("InnerProduct: W is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(w);
  if (es.eigenvalues().minCoeff() <= 1e-12) {
    throw std::invalid_argument("InnerProduct: W is not positive definite");
  }
  InnerProduct ip;
  ip.group_ = spec;
  ip.w_ = std::move(w);
  ip.w_inv_ = es.eigenvectors() *
              es.eigenvalues().cwiseInverse().asDiagonal() *
              es.eigenvectors().transpose();
  ip.ad_invariant_ = evaluate_conditions(spec, ip.w_).invariant;
  return ip;
}

InnerProduct InnerProduct::frobenius(const GroupSpec& spec) {
  const int n = spec.algebra_dim();
  Matrix w(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w(i, j) = (spec.basis(i).transpose() * spec.basis(j)).trace();
    }
  }
  return make(spec, std::move(w));
}

double inner(const InnerProduct& ip, const AlgebraElement& x, const AlgebraElement& y) {
  require_same_group(ip.group(), x.group, "inner");
  require_same_group(x.group, y.group, "inner");
  return x.coords.dot(ip.w() * y.coords);
}

AdInvarianceReport is_ad_invariant(const InnerProduct& ip) {
  return evaluate_conditions(ip.group(), ip.w());
}

DistanceKind DistanceKind::body_se(double mass) {
  if (!(mass > 0.0)) {
    throw std::invalid_argument("DistanceKind::body_se: mass must be positive");
  }
  return {Tag::BodySE, std::nullopt, mass};
}

double distance(const DistanceKind& kind, const GroupElement& g, const GroupElement& h) {
  require_same_group(g.group, h.group, "distance");
  switch (kind.tag) {
    case DistanceKind::Tag::Chordal:
      return chordal_distance(g, h);
    case DistanceKind::Tag::LogNorm:
      return log_norm_distance(*kind.ip, g, h);
    case DistanceKind::Tag::Geodesic:
      return geodesic_distance(*kind.ip, g, h);
    case DistanceKind::Tag::BodySE:
      return body_se_distance(g, h, kind.mass);
    case DistanceKind::Tag::ProductSE3:
      return product_se_distance(g, h);
  }
  throw std::logic_error("distance: unhandled kind");
}

Trajectory geodesic_flow(const InnerProduct& ip, const GroupElement& g0,
                         const AlgebraElement& xi0, double t_end, int steps) {
  require_same_group(ip.group(), g0.group, "geodesic_flow");
  require_same_group(g0.group, xi0.group, "geodesic_flow");
  if (steps < 1) throw std::invalid_argument("geodesic_flow: steps must be >= 1");

  const GroupSpec& spec = g0.group;
  const Matrix& w = ip.w();
  const Matrix& winv = ip.w_inverse();
  const auto rhs = [&](const Vector& xi) -> Vector {
    return winv * (ad_matrix_coords(spec, xi).transpose() * (w * xi));
  };

  const double dt = t_end / steps;
  Trajectory out;
  out.t.reserve(static_cast<std::size_t>(steps) + 1);
  out.points.reserve(static_cast<std::size_t>(steps) + 1);
  out.velocities.reserve(static_cast<std::size_t>(steps) + 1);

  Vector xi = xi0.coords;
  GroupElement gamma = g0;
  out.t.push_back(0.0);
  out.points.push_back(gamma);
  out.velocities.push_back(hat(spec, xi));

  for (int k = 0; k < steps; ++k) {
    const Vector k1 = rhs(xi);
    const Vector k2 = rhs(xi + 0.5 * dt * k1);
    const Vector k3 = rhs(xi + 0.5 * dt * k2);
    const Vector k4 = rhs(xi + dt * k3);
    const Vector xi_next = xi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const Vector xi_mid = 0.5 * (xi + xi_next);
    gamma = mul(gamma, group_exp(hat(spec, dt * xi_mid)));
    xi = xi_next;

    out.t.push_back(dt * (k + 1));
    out.points.push_back(gamma);
    out.velocities.push_back(hat(spec, xi));
  }
  return out;
}

GroupElement riemannian_exp(const InnerProduct& ip, const GroupElement& g,
                            const AlgebraElement& v, const ShootConfig& cfg) {
  require_same_group(ip.group(), g.group, "riemannian_exp");
  require_same_group(g.group, v.group, "riemannian_exp");
  if (ip.ad_invariant() && !cfg.force_ode) {
    return mul(g, group_exp(v));  // constant-velocity geodesic
  }
  Trajectory traj = geodesic_flow(ip, g, v, 1.0, cfg.flow_steps);
  return traj.points.back();
}

AlgebraElement riemannian_log(const InnerProduct& ip, const GroupElement& g,
                              const GroupElement& h, const ShootConfig& cfg) {
  require_same_group(ip.group(), g.group, "riemannian_log");
  require_same_group(g.group, h.group, "riemannian_log");
  const GroupSpec& spec = g.group;

  const AlgebraElement init = group_log(mul(inverse(g), h));
  if (ip.ad_invariant() && !cfg.force_ode) return init;

  const int n = spec.algebra_dim();
  const auto residual = [&](const Vector& v) -> Vector {
    const GroupElement end = riemannian_exp(ip, g, hat(spec, v), cfg);
    return group_log(mul(inverse(end), h)).coords;
  };

  Vector v = init.coords;
  Vector f = residual(v);
  double fnorm = f.norm();
  Vector best_v = v;
  double best_norm = fnorm;

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (fnorm < cfg.tol) return hat(spec, v);

    // forward-difference sensitivity of the shooting residual
    Matrix jac(n, n);
    for (int j = 0; j < n; ++j) {
      Vector vp = v;
      vp[j] += cfg.fd_step;
      jac.col(j) = (residual(vp) - f) / cfg.fd_step;
    }

    const Vector step = jac.colPivHouseholderQr().solve(-f);
    double alpha = 1.0;
    bool accepted = false;
    for (int back = 0; back < 30; ++back) {
      const Vector v_try = v + alpha * step;
      Vector f_try;
      try {
        f_try = residual(v_try);
      } catch (const DomainError&) {
        alpha *= 0.5;  // stepped outside the chart; shorten
        continue;
      }
      if (f_try.norm() < fnorm * (1.0 - 1e-4 * alpha) || f_try.norm() < cfg.tol) {
        v = v_try;
        f = f_try;
        fnorm = f.norm();
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (fnorm < best_norm) {
      best_norm = fnorm;
      best_v = v;
    }
    if (!accepted) {
      throw NonConvergenceError(
          "riemannian_log: line search stalled; best residual " +
              std::to_string(best_norm),
          best_norm, iter + 1);
    }
  }
  if (fnorm < cfg.tol) return hat(spec, v);
  throw NonConvergenceError(
      "riemannian_log: no convergence within iteration budget; best residual " +
          std::to_string(best_norm),
      best_norm, cfg.max_iter);
}

double geodesic_distance(const InnerProduct& ip, const GroupElement& g,
                         const GroupElement& h, const ShootConfig& cfg) {
  if (ip.ad_invariant() && !cfg.force_ode) {
    return ip.norm(group_log(mul(inverse(g), h)).coords);
  }
  return ip.norm(riemannian_log(ip, g, h, cfg).coords);
}

GroupSpec orthonormalize_basis(const InnerProduct& ip) {
  return orthonormalize_basis(ip.group(), ip.w());
}

}  // namespace liemeans
