// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace isoframe {

std::vector<double> singular_values(MatR m) {
  if (m.size() == 0) throw std::invalid_argument("singular_values: empty matrix");
  const lapack_int rows = static_cast<lapack_int>(m.rows());
  const lapack_int cols = static_cast<lapack_int>(m.cols());
  std::vector<double> s(static_cast<size_t>(std::min(rows, cols)));
  lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', rows, cols, m.data(), rows, s.data(),
                                   nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("dgesdd failed, info=" + std::to_string(info));
  return s;
}

std::vector<double> singular_values(MatC m) {
  if (m.size() == 0) throw std::invalid_argument("singular_values: empty matrix");
  const lapack_int rows = static_cast<lapack_int>(m.rows());
  const lapack_int cols = static_cast<lapack_int>(m.cols());
  std::vector<double> s(static_cast<size_t>(std::min(rows, cols)));
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', rows, cols,
                                   reinterpret_cast<lapack_complex_double*>(m.data()), rows,
                                   s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
  return s;
}

RankResult rank_from_svals(std::vector<double> svals, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("rank tolerance must be positive");
  std::sort(svals.begin(), svals.end(), std::greater<>());
  RankResult out;
  out.sigma_max = svals.empty() ? 0.0 : svals.front();
  out.threshold = tol * out.sigma_max;
  for (double s : svals) {
    if (s >= out.threshold && s > 0.0) ++out.rank;
  }
  const double floor = std::max(out.sigma_max * 1e-300, 1e-300);
  for (size_t i = 0; i + 1 < svals.size(); ++i) {
    const double g = std::log10(std::max(svals[i], floor) / std::max(svals[i + 1], floor));
    if (g > out.gap_log10) {
      out.gap_log10 = g;
      out.gap_index = static_cast<int>(i);
    }
  }
  out.svals = std::move(svals);
  return out;
}

RankResult rank_with_tolerance(const MatR& m, double tol) {
  return rank_from_svals(singular_values(m), tol);
}

RankResult rank_with_tolerance(const MatC& m, double tol) {
  return rank_from_svals(singular_values(m), tol);
}

RightSvd svd_right(MatR m) {
  if (m.size() == 0) throw std::invalid_argument("svd_right: empty matrix");
  const lapack_int cols = static_cast<lapack_int>(m.cols());
  if (m.rows() < m.cols()) {
    MatR padded = MatR::Zero(cols, cols);
    padded.topRows(m.rows()) = m;
    m.swap(padded);
  }
  const lapack_int rows = static_cast<lapack_int>(m.rows());
  RightSvd out;
  out.svals.resize(static_cast<size_t>(cols));
  MatR vt(cols, cols);
  lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'O', rows, cols, m.data(), rows,
                                   out.svals.data(), nullptr, 1, vt.data(), cols);
  if (info != 0) throw std::runtime_error("dgesdd failed, info=" + std::to_string(info));
  out.v = vt.transpose();
  return out;
}

MatR orthonormal_range(const MatR& m, double tol, double abs_tol) {
  if (m.cols() == 0 || m.rows() == 0) return MatR(m.rows(), 0);
  MatR work = m;
  const lapack_int rows = static_cast<lapack_int>(work.rows());
  const lapack_int cols = static_cast<lapack_int>(work.cols());
  const lapack_int k = std::min(rows, cols);
  std::vector<double> s(static_cast<size_t>(k));
  MatR u(rows, k);
  MatR vt(k, cols);
  lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', rows, cols, work.data(), rows, s.data(),
                                   u.data(), rows, vt.data(), k);
  if (info != 0) throw std::runtime_error("dgesdd failed, info=" + std::to_string(info));
  int r = 0;
  for (double x : s) {
    if (x > tol * s[0] && x > abs_tol) ++r;
  }
  return u.leftCols(r);
}

StreamingTriangle::StreamingTriangle(int n) : n_(n), r_(MatR::Zero(n, n)) {}

void StreamingTriangle::add_rows(const MatR& block) {
  if (block.cols() != n_) throw std::invalid_argument("StreamingTriangle: column mismatch");
  if (block.rows() == 0) return;
  MatR b = block;
  const lapack_int m = static_cast<lapack_int>(b.rows());
  const lapack_int nb = std::max<lapack_int>(1, std::min<lapack_int>(32, n_));
  MatR t(nb, n_);
  lapack_int info = LAPACKE_dtpqrt(LAPACK_COL_MAJOR, m, n_, 0, nb, r_.data(), n_, b.data(), m,
                                   t.data(), nb);
  if (info != 0) throw std::runtime_error("dtpqrt failed, info=" + std::to_string(info));
  rows_ += m;
}

std::vector<double> StreamingTriangle::singular_values() const {
  MatR r = r_.triangularView<Eigen::Upper>();
  return isoframe::singular_values(std::move(r));
}

LanczosResult lanczos_extremes(const std::function<VecR(const VecR&)>& apply, int n, int count,
                               int max_iter, double rel_tol, std::uint64_t seed) {
  LanczosResult out;
  if (n <= 0) return out;
  max_iter = std::min(max_iter, n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  MatR basis(n, max_iter + 1);
  VecR v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  basis.col(0) = v / v.norm();
  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::SelfAdjointEigenSolver<MatR> tri;
  for (int m = 0; m < max_iter; ++m) {
    VecR w = apply(basis.col(m));
    if (m > 0) w -= beta.back() * basis.col(m - 1);
    const double a = basis.col(m).dot(w);
    w -= a * basis.col(m);
    for (int pass = 0; pass < 2; ++pass) {
      const VecR proj = basis.leftCols(m + 1).transpose() * w;
      w -= basis.leftCols(m + 1) * proj;
    }
    alpha.push_back(a);
    const double b = w.norm();
    out.iterations = m + 1;
    const int k = m + 1;
    const bool last = (m + 1 == max_iter) || b == 0.0;
    if (k >= count && (k % 10 == 0 || last)) {
      MatR t = MatR::Zero(k, k);
      for (int i = 0; i < k; ++i) {
        t(i, i) = alpha[static_cast<size_t>(i)];
        if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[static_cast<size_t>(i)];
      }
      tri.compute(t);
      const VecR& theta = tri.eigenvalues();
      out.largest = theta(k - 1);
      bool ok = true;
      for (int i = 0; i < count; ++i) {
        const double resid = std::abs(b * tri.eigenvectors()(k - 1, i));
        if (resid > rel_tol * out.largest) ok = false;
      }
      if (ok || last) {
        out.smallest.assign(theta.data(), theta.data() + count);
        out.converged = ok;
        return out;
      }
    }
    if (b == 0.0) break;
    beta.push_back(b);
    basis.col(m + 1) = w / b;
  }
  return out;
}

}  // namespace isoframe
