// liemeans: means and covariances on matrix Lie groups
// SPDX-License-Identifier: Apache-2.0

#include "liemeans/group_spec.hpp"

#include <cmath>
#include <sstream>

namespace liemeans {

namespace {

Vector vec_of(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

}  // namespace

StructureConstants::StructureConstants(int n, std::vector<double> flat)
    : n_(n), flat_(std::move(flat)) {
  if (flat_.size() != static_cast<std::size_t>(n) * n * n) {
    throw std::invalid_argument("structure constants: wrong tensor size");
  }
}

Vector StructureConstants::bracket_coords(int i, int j) const {
  Vector out(n_);
  for (int k = 0; k < n_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

GroupSpec GroupSpec::make(std::string name, int m, int n,
                          std::vector<Matrix> basis, StructureConstants c,
                          ClosedForms forms, GroupFamily family,
                          int spatial_dim) {
  if (n <= 0 || m <= 0 || basis.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("GroupSpec: need n basis matrices");
  }
  for (const Matrix& e : basis) {
    if (e.rows() != m || e.cols() != m) {
      throw std::invalid_argument("GroupSpec: basis matrix is not m x m");
    }
  }

  auto data = std::make_shared<Data>();
  data->name = std::move(name);
  data->m = m;
  data->n = n;
  data->basis = std::move(basis);
  data->forms = std::move(forms);
  data->family = family;
  data->spatial_dim = spatial_dim;

  data->basis_flat.resize(m * m, n);
  for (int i = 0; i < n; ++i) data->basis_flat.col(i) = vec_of(data->basis[static_cast<std::size_t>(i)]);

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(data->basis_flat);
  if (cod.rank() != n) {
    throw std::invalid_argument("GroupSpec: basis matrices are linearly dependent");
  }
  data->basis_pinv = cod.pseudoInverse();

  // Derive structure constants from the matrix brackets when not supplied.
  if (c.dim() == 0) {
    std::vector<double> flat(static_cast<std::size_t>(n) * n * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Matrix br = data->basis[static_cast<std::size_t>(i)] * data->basis[static_cast<std::size_t>(j)] -
                          data->basis[static_cast<std::size_t>(j)] * data->basis[static_cast<std::size_t>(i)];
        const Vector coords = data->basis_pinv * vec_of(br);
        for (int k = 0; k < n; ++k) flat[static_cast<std::size_t>((i * n + j) * n + k)] = coords[k];
      }
    }
    c = StructureConstants(n, std::move(flat));
  }

  // Antisymmetry.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (std::abs(c(i, j, k) + c(j, i, k)) > 1e-12) {
          throw std::invalid_argument("GroupSpec: structure constants not antisymmetric");
        }
      }
    }
  }

  // The constants must reproduce the matrix brackets.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix br = data->basis[static_cast<std::size_t>(i)] * data->basis[static_cast<std::size_t>(j)] -
                  data->basis[static_cast<std::size_t>(j)] * data->basis[static_cast<std::size_t>(i)];
      for (int k = 0; k < n; ++k) br -= c(i, j, k) * data->basis[static_cast<std::size_t>(k)];
      if (br.cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("GroupSpec: structure constants do not reproduce brackets");
      }
    }
  }

  // Jacobi identity.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int mm = 0; mm < n; ++mm) {
            s += c(i, j, mm) * c(mm, k, l) + c(j, k, mm) * c(mm, i, l) +
                 c(k, i, mm) * c(mm, j, l);
          }
          if (std::abs(s) > 1e-12) {
            throw std::invalid_argument("GroupSpec: Jacobi identity violated");
          }
        }
      }
    }
  }

  data->c = std::move(c);

  GroupSpec spec;
  spec.data_ = std::move(data);
  return spec;
}

double GroupSpec::membership_residual(const Matrix& g) const {
  if (g.rows() != data_->m || g.cols() != data_->m) {
    return std::numeric_limits<double>::infinity();
  }
  if (data_->forms.membership_residual) {
    return data_->forms.membership_residual(g);
  }
  // Generic groups: only invertibility is required.
  const double det = g.determinant();
  return std::abs(det) > 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
}

bool GroupSpec::same_group(const GroupSpec& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  if (data_->name != other.data_->name || data_->m != other.data_->m ||
      data_->n != other.data_->n) {
    return false;
  }
  for (int i = 0; i < data_->n; ++i) {
    if ((data_->basis[static_cast<std::size_t>(i)] - other.data_->basis[static_cast<std::size_t>(i)])
            .cwiseAbs()
            .maxCoeff() > 1e-12) {
      return false;
    }
  }
  return true;
}

GroupElement make_element(const GroupSpec& spec, Matrix mat, double tol) {
  const double r = spec.membership_residual(mat);
  if (!(r <= tol)) {
    std::ostringstream os;
    os << "matrix is not an element of " << spec.name()
       << " (membership residual " << r << ")";
    throw MembershipError(os.str());
  }
  return GroupElement{spec, std::move(mat)};
}

GroupElement identity(const GroupSpec& spec) {
  return GroupElement{spec, Matrix::Identity(spec.ambient_dim(), spec.ambient_dim())};
}

AlgebraElement hat(const GroupSpec& spec, const Vector& coords) {
  if (coords.size() != spec.algebra_dim()) {
    throw std::invalid_argument("hat: coordinate vector has wrong length");
  }
  Matrix mat = Matrix::Zero(spec.ambient_dim(), spec.ambient_dim());
  for (int i = 0; i < spec.algebra_dim(); ++i) mat += coords[i] * spec.basis(i);
  return AlgebraElement{spec, coords, std::move(mat)};
}

Vector vee(const AlgebraElement& x) { return x.coords; }

AlgebraElement algebra_from_matrix(const GroupSpec& spec, const Matrix& mat,
                                   double tol) {
  if (mat.rows() != spec.ambient_dim() || mat.cols() != spec.ambient_dim()) {
    throw std::invalid_argument("algebra_from_matrix: wrong matrix size");
  }
  const Vector v = Eigen::Map<const Vector>(mat.data(), mat.size());
  Vector coords = spec.basis_pinv() * v;
  const Vector recon = spec.basis_flat() * coords;
  const double scale = 1.0 + v.cwiseAbs().maxCoeff();
  if ((recon - v).cwiseAbs().maxCoeff() > tol * scale) {
    throw DomainError("algebra_from_matrix: matrix is not in the span of the basis");
  }
  return hat(spec, coords);
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  require_same_group(a.group, b.group, "mul");
  return GroupElement{a.group, a.mat * b.mat};
}

GroupElement inverse(const GroupElement& g) {
  const ClosedForms& forms = g.group.closed_forms();
  if (forms.inverse) return GroupElement{g.group, forms.inverse(g.mat)};
  return GroupElement{g.group, g.mat.inverse()};
}

void require_same_group(const GroupSpec& a, const GroupSpec& b,
                        const char* context) {
  if (!a.same_group(b)) {
    throw GroupMismatchError(std::string(context) + ": values belong to different groups (" +
                             a.name() + " vs " + b.name() + ")");
  }
}

}  // namespace liemeans
