// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "isoframe/types.hpp"

namespace isoframe {

struct RankResult {
  int rank = 0;
  std::vector<double> svals;  // descending
  double sigma_max = 0.0;
  double threshold = 0.0;
  // Largest ratio svals[i] / svals[i+1] (log10), i is the index before the gap.
  int gap_index = -1;
  double gap_log10 = 0.0;
};

// Singular values in descending order. LAPACK dgesdd / zgesdd, values only.
std::vector<double> singular_values(MatR m);
std::vector<double> singular_values(MatC m);

RankResult rank_from_svals(std::vector<double> svals, double tol);
RankResult rank_with_tolerance(const MatR& m, double tol);
RankResult rank_with_tolerance(const MatC& m, double tol);

struct RightSvd {
  std::vector<double> svals;  // descending, length min(rows, cols)
  MatR v;                     // cols x cols, column i pairs with svals[i] (zero-padded tail)
};
RightSvd svd_right(MatR m);

// Orthonormal basis of the column space of m, columns kept above tol * sigma_max
// and above abs_tol.
MatR orthonormal_range(const MatR& m, double tol, double abs_tol = 0.0);

// Upper-triangular factor of a tall matrix fed in row blocks; keeps only an
// n x n triangle in memory.
class StreamingTriangle {
 public:
  explicit StreamingTriangle(int n);
  void add_rows(const MatR& block);
  int cols() const { return n_; }
  long rows_seen() const { return rows_; }
  std::vector<double> singular_values() const;

 private:
  int n_;
  long rows_ = 0;
  MatR r_;
};

struct LanczosResult {
  std::vector<double> smallest;  // eigenvalues, ascending
  double largest = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Extreme eigenvalues of a symmetric positive semidefinite operator given by
// its matrix-vector product. Full reorthogonalization.
LanczosResult lanczos_extremes(const std::function<VecR(const VecR&)>& apply, int n, int count,
                               int max_iter, double rel_tol, std::uint64_t seed);

}  // namespace isoframe
