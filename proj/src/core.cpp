// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/core.hpp"

#include <cmath>
#include <sstream>

namespace isoframe {

namespace {

double max_abs(const MatC& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

void validate_vectors(const VectorSet& v, double eps_norm) {
  if (v.d <= 0 || v.vectors.rows() != v.d) {
    throw ValidationError("vector set: dimension mismatch");
  }
  if (v.size() < v.d) throw ValidationError("vector set: N < d");
  for (int j = 0; j < v.size(); ++j) {
    const double dev = std::abs(v.vectors.col(j).norm() - 1.0);
    if (dev > eps_norm) {
      std::ostringstream msg;
      msg << "vector " << j << " not normalized (|norm-1| = " << dev << ")";
      throw ValidationError(msg.str());
    }
  }
}

GramMatrix gram_from_vectors(const VectorSet& v) {
  if (v.vectors.rows() != v.d) throw std::invalid_argument("gram_from_vectors: dimension mismatch");
  GramMatrix g;
  g.d = v.d;
  g.entries = v.vectors.adjoint() * v.vectors;
  // Exact hermiticity and a real diagonal.
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    g.entries(i, i) = cplx(g.entries(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) g.entries(j, i) = std::conj(g.entries(i, j));
  }
  return g;
}

double povm_residual(const GramMatrix& g) {
  const double c = static_cast<double>(g.size()) / g.d;
  return max_abs(g.entries * g.entries - c * g.entries);
}

std::vector<Pair> support_pattern(const MatC& u, double eps_zero) {
  std::vector<Pair> out;
  const int n = static_cast<int>(u.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(u(i, j)) > eps_zero) out.emplace_back(i, j);
    }
  }
  return out;
}

double unitarity_residual(const MatC& u) {
  return max_abs(u * u.adjoint() - MatC::Identity(u.rows(), u.cols()));
}

HermitianUnitary unitary_from_gram(const GramMatrix& g, const Tolerances& tol, bool check) {
  const int n = g.size();
  if (g.d <= 0 || n < g.d) throw std::invalid_argument("unitary_from_gram: bad shape");
  if (check) {
    const double res = povm_residual(g);
    if (res > tol.povm) {
      std::ostringstream msg;
      msg << "Gram matrix violates G^2 = (N/d) G: residual " << res;
      throw ValidationError(msg.str());
    }
  }
  HermitianUnitary u;
  u.d = g.d;
  u.n = n;
  const double scale = 2.0 * g.d / n;
  u.entries = MatC::Identity(n, n) - scale * g.entries;
  if (check) {
    const double res = unitarity_residual(u.entries);
    if (res > tol.unit) throw ValidationError("U is not unitary within tolerance");
    const double diag = 1.0 - scale;
    for (int i = 0; i < n; ++i) {
      if (std::abs(u.entries(i, i) - diag) > tol.unit) {
        throw ValidationError("U has nonconstant diagonal");
      }
    }
  }
  u.support = support_pattern(u.entries, tol.zero);
  return u;
}

GramMatrix gram_from_unitary(const HermitianUnitary& u, const Tolerances& tol) {
  const int n = u.n;
  const double diag = 1.0 - 2.0 * u.d / n;
  for (int i = 0; i < n; ++i) {
    if (std::abs(u.entries(i, i) - diag) > tol.unit) {
      throw ValidationError("gram_from_unitary: nonconstant diagonal");
    }
  }
  GramMatrix g;
  g.d = u.d;
  g.entries = (static_cast<double>(n) / (2.0 * u.d)) * (MatC::Identity(n, n) - u.entries);
  return g;
}

VectorSet vectors_from_gram(const GramMatrix& g, const Tolerances& tol) {
  const int n = g.size();
  Eigen::SelfAdjointEigenSolver<MatC> eig(g.entries);
  const VecR& lambda = eig.eigenvalues();  // ascending
  const double lmax = lambda(n - 1);
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    if (lambda(i) > tol.rank * lmax) ++rank;
  }
  if (rank != g.d) {
    throw ValidationError("Gram matrix has numerical rank " + std::to_string(rank) +
                          ", expected " + std::to_string(g.d));
  }
  VectorSet v;
  v.d = g.d;
  v.vectors.resize(g.d, n);
  for (int k = 0; k < g.d; ++k) {
    const int idx = n - g.d + k;
    v.vectors.row(k) = std::sqrt(lambda(idx)) * eig.eigenvectors().col(idx).adjoint();
  }
  // Phase of each coordinate row; a diagonal unitary leaves the Gram matrix unchanged.
  for (int k = 0; k < g.d; ++k) {
    for (int j = 0; j < n; ++j) {
      const double a = std::abs(v.vectors(k, j));
      if (a > tol.zero) {
        v.vectors.row(k) *= std::conj(v.vectors(k, j)) / a;
        v.vectors(k, j) = cplx(a, 0.0);
        break;
      }
    }
  }
  const double res = max_abs(gram_from_vectors(v).entries - g.entries);
  if (res > std::max(tol.povm, 1e-8)) throw ValidationError("vectors_from_gram: reconstruction failed");
  return v;
}

double verify_povm(const VectorSet& v) {
  const double c = static_cast<double>(v.size()) / v.d;
  MatC frame = v.vectors * v.vectors.adjoint();
  return max_abs(frame - c * MatC::Identity(v.d, v.d));
}

double verify_symmetry(const VectorSet& v, const SymmetryMatrix& s) {
  if (s.entries.rows() != v.size() || s.entries.cols() != v.size()) {
    throw std::invalid_argument("verify_symmetry: shape mismatch");
  }
  const MatC g = v.vectors.adjoint() * v.vectors;
  return (g.cwiseAbs2() - s.entries).cwiseAbs().maxCoeff();
}

}  // namespace isoframe
