// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include "liemeans/lie_core.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

namespace liemeans {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Even Bernoulli numbers B_2 .. B_20.
constexpr double kBernoulliEven[] = {
    1.0 / 6.0,       -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0};

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double spectral_radius(const Matrix& a) {
  Eigen::EigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// The generic principal log requires no eigenvalue on the closed negative
// real axis.
void check_principal_log_domain(const Matrix& g) {
  Eigen::EigenSolver<Matrix> es(g, /*computeEigenvectors=*/false);
  const auto& ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i].real() <= 0.0 && std::abs(ev[i].imag()) < 1e-12) {
      std::ostringstream os;
      os << "group_log: eigenvalue " << ev[i].real()
         << " on the closed negative real axis; element is outside the "
            "principal-log domain";
      throw DomainError(os.str());
    }
  }
}

}  // namespace

GroupElement group_exp(const AlgebraElement& x) {
  const ClosedForms& forms = x.group.closed_forms();
  Matrix g = forms.exp ? forms.exp(x.mat) : Matrix(x.mat.exp());
  return GroupElement{x.group, std::move(g)};
}

AlgebraElement group_log(const GroupElement& g) {
  const ClosedForms& forms = g.group.closed_forms();
  if (forms.log) {
    return algebra_from_matrix(g.group, forms.log(g.mat));
  }
  check_principal_log_domain(g.mat);
  return algebra_from_matrix(g.group, g.mat.log());
}

Matrix ad_matrix_coords(const GroupSpec& spec, const Vector& coords) {
  const int n = spec.algebra_dim();
  const StructureConstants& c = spec.structure_constants();
  Matrix ad = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += coords[k] * c(k, j, i);
      ad(i, j) = s;
    }
  }
  return ad;
}

Matrix ad_matrix(const AlgebraElement& x) {
  return ad_matrix_coords(x.group, x.coords);
}

Matrix Ad_matrix(const GroupElement& g) {
  const int n = g.group.algebra_dim();
  const Matrix ginv = inverse(g).mat;
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    const Matrix conj = g.mat * g.group.basis(i) * ginv;
    out.col(i) = g.group.basis_pinv() *
                 Eigen::Map<const Vector>(conj.data(), conj.size());
  }
  return out;
}

bool is_unimodular(const GroupSpec& spec, double tol) {
  const int n = spec.algebra_dim();
  const StructureConstants& c = spec.structure_constants();
  for (int i = 0; i < n; ++i) {
    double trace = 0.0;
    for (int j = 0; j < n; ++j) trace += c(i, j, j);
    if (std::abs(trace) > tol) return false;
  }
  return true;
}

Matrix jacobian_log_from_ad(const Matrix& ad) {
  const double rho = spectral_radius(ad);
  if (!(rho < kTwoPi)) {
    std::ostringstream os;
    os << "jacobian_log: spectral radius of ad (" << rho
       << ") exceeds the 2*pi convergence safeguard";
    throw DomainError(os.str());
  }
  const Eigen::Index n = ad.rows();
  Matrix j = Matrix::Identity(n, n) + 0.5 * ad;
  const Matrix ad2 = ad * ad;
  Matrix power = ad2;
  for (int i = 1; i <= 10; ++i) {
    const Matrix term = (kBernoulliEven[i - 1] / factorial(2 * i)) * power;
    j += term;
    if (term.cwiseAbs().maxCoeff() < 1e-16) break;
    power = power * ad2;
  }
  return j;
}

Matrix jacobian_exp_from_ad(const Matrix& ad) {
  const Eigen::Index n = ad.rows();
  Matrix j = Matrix::Identity(n, n);
  Matrix power = Matrix::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    power = power * (-ad);
    const Matrix term = power / factorial(k + 1);
    j += term;
    if (term.cwiseAbs().maxCoeff() < 1e-16) break;
  }
  return j;
}

Matrix jacobian_log(const GroupElement& h) {
  return jacobian_log_from_ad(ad_matrix(group_log(h)));
}

Matrix jacobian_exp(const AlgebraElement& x) {
  return jacobian_exp_from_ad(ad_matrix(x));
}

GroupSpec orthonormalize_basis(const GroupSpec& spec, const Matrix& w) {
  const int n = spec.algebra_dim();
  if (w.rows() != n || w.cols() != n) {
    throw std::invalid_argument("orthonormalize_basis: W has wrong size");
  }
  if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("orthonormalize_basis: W is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(w);
  if (es.eigenvalues().minCoeff() <= 1e-12) {
    throw std::invalid_argument("orthonormalize_basis: W is not positive definite");
  }
  const Matrix sqrt_w = es.operatorSqrt();
  const Matrix sqrt_w_inv = es.operatorInverseSqrt();

  std::vector<Matrix> new_basis(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Matrix e = Matrix::Zero(spec.ambient_dim(), spec.ambient_dim());
    for (int j = 0; j < n; ++j) e += sqrt_w_inv(i, j) * spec.basis(j);
    new_basis[static_cast<std::size_t>(i)] = std::move(e);
  }

  // C'(i,j,k) = sqrt(W)^{-1}_{is} sqrt(W)^{-1}_{jl} sqrt(W)_{kr} C(s,l,r)
  const StructureConstants& c = spec.structure_constants();
  std::vector<double> flat(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            for (int r = 0; r < n; ++r) {
              s += sqrt_w_inv(i, a) * sqrt_w_inv(j, b) * sqrt_w(k, r) * c(a, b, r);
            }
          }
        }
        flat[static_cast<std::size_t>((i * n + j) * n + k)] = s;
      }
    }
  }

  return GroupSpec::make(spec.name() + "#onb", spec.ambient_dim(), n,
                         std::move(new_basis), StructureConstants(n, std::move(flat)),
                         spec.closed_forms(), spec.family(), spec.spatial_dim());
}

}  // namespace liemeans
