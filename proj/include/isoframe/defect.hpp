// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoframe/linalg.hpp"
#include "isoframe/types.hpp"

namespace isoframe {

// Which support pairs are pinned to zero before assembly. row < 0 disables
// fixing; otherwise every support pair (row, j) is removed.
struct GaugeChoice {
  int row = 0;
  static GaugeChoice none() { return GaugeChoice{-1}; }
  bool fixed() const { return row >= 0; }
};

// Real antisymmetric phase pattern on the support of U.
struct PhasePattern {
  MatR r;
};

struct SupportCounts {
  std::vector<Pair> support;
  int z = 0;
  int tau_paper = 0;
  int tau_effective = 0;
  int row_degree = 0;  // support pairs touching the gauge row
};

SupportCounts support_and_counts(const HermitianUnitary& u, GaugeChoice gauge = {});

// Columns: support pairs minus the gauge-fixed ones, in lexicographic order.
std::vector<Pair> system_columns(int n, const std::vector<Pair>& support, GaugeChoice gauge);

struct LinearSystem {
  MatR matrix;  // rows 2p, 2p+1: real and imaginary part of equation p = (j<k)
  std::vector<Pair> col_index;
  std::vector<Pair> gauge_fixed;
  int n = 0;
};

LinearSystem build_linear_system(const HermitianUnitary& u, GaugeChoice gauge = {});
// Assembly on an explicit support pattern; u need not have exact zeros.
LinearSystem build_linear_system(const MatC& u, const std::vector<Pair>& support, GaugeChoice gauge);

// The same system applied without storing it: x -> (U o X) U + U (U o X)
// restricted to the upper triangle, X antisymmetric from x.
class SystemOperator {
 public:
  SystemOperator(MatC u, std::vector<Pair> columns);
  long rows() const { return static_cast<long>(n_) * (n_ - 1); }
  int cols() const { return static_cast<int>(columns_.size()); }
  VecR apply(const VecR& x) const;
  VecR apply_transpose(const VecR& y) const;
  VecR apply_normal(const VecR& x) const { return apply_transpose(apply(x)); }

 private:
  MatC u_;
  std::vector<Pair> columns_;
  int n_;
};

PhasePattern pattern_from_coefficients(int n, const std::vector<Pair>& columns, const VecR& x);
VecR coefficients_from_pattern(const std::vector<Pair>& columns, const PhasePattern& p);

enum class RankMethod { Auto, Dense, Streaming, Lanczos };

struct DefectOptions {
  double tol = 1e-8;
  GaugeChoice gauge{};
  RankMethod method = RankMethod::Auto;
  bool long_running = false;
  // Dense SVD is used while rows*cols*8 bytes stays below this.
  double dense_bytes = 1.5e9;
  int lanczos_count = 8;
};

struct DefectReport {
  int n = 0;
  int d = 0;
  int z = 0;
  int tau_paper = 0;
  int tau_effective = 0;
  int support_size = 0;
  int row_degree = 0;
  int gauge_row = 0;
  long rows = 0;
  int r = 0;
  int delta_paper = 0;
  bool delta_consistent = true;  // tau_paper >= r
  int nullity = 0;
  int gauge_dim = 0;
  int free_parameters = 0;
  double gauge_residual = 0.0;  // max ||R g|| over the gauge basis
  double tol = 0.0;
  double sigma_max = 0.0;
  int gap_index = -1;
  double gap_log10 = 0.0;
  std::vector<double> svals;  // descending; for Lanczos only the computed smallest ones
  std::string method;
  bool complete = true;  // false when the Lanczos path could not bound the nullity
};

// Rank of the assembled system, dense or streamed according to options.
RankResult system_rank(const MatC& u, const std::vector<Pair>& columns, const DefectOptions& opt,
                       std::string* method = nullptr, bool* complete = nullptr);

DefectReport restricted_defect(const HermitianUnitary& u, const DefectOptions& opt = {});

// Orthonormal kernel basis (columns of the returned matrix, in system columns).
MatR kernel_coefficients(const LinearSystem& sys, double tol);
std::vector<PhasePattern> kernel_basis(const LinearSystem& sys, double tol);

// Orthonormal basis of enphasing directions theta_k - theta_j that respect the
// gauge fixing, expressed in system columns.
MatR gauge_subspace(const HermitianUnitary& u, GaugeChoice gauge = {});
MatR gauge_subspace(int n, const std::vector<Pair>& support, GaugeChoice gauge);

int free_parameters(const HermitianUnitary& u, const DefectOptions& opt = {});

// Dimension of span(a) intersected with span(b), both orthonormal.
int subspace_intersection_dim(const MatR& a, const MatR& b, double tol = 1e-6);

// U' = P E U E^dag P^T with (P U P^T)_{ij} = U_{perm[i], perm[j]} and E = diag(e^{i phases}).
HermitianUnitary transform_unitary(const HermitianUnitary& u, const std::vector<int>& perm,
                                   const std::vector<double>& phases, double eps_zero = 1e-10);
// Unfixed rank, nullity and gauge dimension, and the free-parameter count under
// opt, agree between U and its transform.
bool defect_invariance_check(const HermitianUnitary& u, const std::vector<int>& perm,
                             const std::vector<double>& phases, const DefectOptions& opt = {});

// Bookkeeping conventions used to compare with published tables.
struct TableCounts {
  std::string convention;
  int tau = 0;
  int r = 0;
  int delta = 0;
};
// "all-pairs": every pair is a variable, zero entries pinned by R_ij = 0, no
// gauge fixing. "support-fixed": support variables, fixing equations counted.
TableCounts table_counts_all_pairs(const HermitianUnitary& u, double tol);
TableCounts table_counts_support_fixed(const HermitianUnitary& u, double tol, int row = 0);

}  // namespace isoframe
