// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/defect.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "isoframe/core.hpp"
#include "isoframe/kernels.hpp"

namespace isoframe {

namespace {

Eigen::MatrixXi column_lookup(int n, const std::vector<Pair>& columns) {
  Eigen::MatrixXi id = Eigen::MatrixXi::Constant(n, n, -1);
  for (size_t c = 0; c < columns.size(); ++c) {
    id(columns[c].first, columns[c].second) = static_cast<int>(c);
    id(columns[c].second, columns[c].first) = static_cast<int>(c);
  }
  return id;
}

// Fills rows [2*p0, 2*p1) of the system for pair-equations p0 <= p < p1.
class Assembler {
 public:
  Assembler(const MatC& u, const std::vector<Pair>& columns)
      : n_(static_cast<int>(u.rows())), ut_(u.transpose()), id_(column_lookup(n_, columns)),
        coef_(n_) {
    for (int j = 0; j < n_; ++j) {
      for (int k = j + 1; k < n_; ++k) pairs_.emplace_back(j, k);
    }
  }

  long equations() const { return static_cast<long>(pairs_.size()); }

  void fill(long p0, long p1, MatR& block) {
    block.setZero(2 * (p1 - p0), block.cols());
    for (long p = p0; p < p1; ++p) {
      const auto [j, k] = pairs_[static_cast<size_t>(p)];
      // U_jl U_lk = U_jl conj(U_kl) for Hermitian U.
      kernels::cmul_conj(ut_.col(j).data(), ut_.col(k).data(), coef_.data(),
                         static_cast<size_t>(n_));
      const long row = 2 * (p - p0);
      for (int l = 0; l < n_; ++l) {
        const cplx c = coef_(l);
        if (c == cplx(0.0, 0.0)) continue;
        const int cj = id_(j, l);
        if (cj >= 0) {
          const double s = j < l ? 1.0 : -1.0;
          block(row, cj) += s * c.real();
          block(row + 1, cj) += s * c.imag();
        }
        const int ck = id_(k, l);
        if (ck >= 0) {
          const double s = k < l ? -1.0 : 1.0;
          block(row, ck) += s * c.real();
          block(row + 1, ck) += s * c.imag();
        }
      }
    }
  }

 private:
  int n_;
  MatC ut_;
  Eigen::MatrixXi id_;
  VecC coef_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Pair> system_columns(int n, const std::vector<Pair>& support, GaugeChoice gauge) {
  std::vector<Pair> cols;
  for (const auto& p : support) {
    if (p.first < 0 || p.second >= n) throw std::invalid_argument("support pair out of range");
    if (gauge.fixed() && (p.first == gauge.row || p.second == gauge.row)) continue;
    cols.push_back(p);
  }
  return cols;
}

SupportCounts support_and_counts(const HermitianUnitary& u, GaugeChoice gauge) {
  SupportCounts c;
  const int n = u.n;
  c.support = u.support;
  c.z = n * (n - 1) / 2 - static_cast<int>(u.support.size());
  c.tau_paper = (n - 1) * (n - 2) / 2 - c.z;
  if (gauge.fixed()) {
    for (const auto& p : u.support) {
      if (p.first == gauge.row || p.second == gauge.row) ++c.row_degree;
    }
  }
  c.tau_effective = static_cast<int>(u.support.size()) - c.row_degree;
  return c;
}

LinearSystem build_linear_system(const MatC& u, const std::vector<Pair>& support,
                                 GaugeChoice gauge) {
  LinearSystem sys;
  sys.n = static_cast<int>(u.rows());
  sys.col_index = system_columns(sys.n, support, gauge);
  for (const auto& p : support) {
    if (gauge.fixed() && (p.first == gauge.row || p.second == gauge.row)) sys.gauge_fixed.push_back(p);
  }
  Assembler asm_(u, sys.col_index);
  sys.matrix.resize(2 * asm_.equations(), static_cast<long>(sys.col_index.size()));
  asm_.fill(0, asm_.equations(), sys.matrix);
  return sys;
}

LinearSystem build_linear_system(const HermitianUnitary& u, GaugeChoice gauge) {
  return build_linear_system(u.entries, u.support, gauge);
}

SystemOperator::SystemOperator(MatC u, std::vector<Pair> columns)
    : u_(std::move(u)), columns_(std::move(columns)), n_(static_cast<int>(u_.rows())) {}

VecR SystemOperator::apply(const VecR& x) const {
  MatC a = MatC::Zero(n_, n_);
  for (size_t c = 0; c < columns_.size(); ++c) {
    const auto [i, j] = columns_[c];
    a(i, j) = u_(i, j) * x(static_cast<long>(c));
    a(j, i) = -u_(j, i) * x(static_cast<long>(c));
  }
  MatC e = a * u_;
  e.noalias() += u_ * a;
  VecR y(rows());
  long p = 0;
  for (int j = 0; j < n_; ++j) {
    for (int k = j + 1; k < n_; ++k, ++p) {
      y(2 * p) = e(j, k).real();
      y(2 * p + 1) = e(j, k).imag();
    }
  }
  return y;
}

VecR SystemOperator::apply_transpose(const VecR& y) const {
  MatC w = MatC::Zero(n_, n_);
  long p = 0;
  for (int j = 0; j < n_; ++j) {
    for (int k = j + 1; k < n_; ++k, ++p) w(j, k) = cplx(y(2 * p), y(2 * p + 1));
  }
  MatC b = w * u_;
  b.noalias() += u_ * w;
  VecR x(cols());
  for (size_t c = 0; c < columns_.size(); ++c) {
    const auto [i, j] = columns_[c];
    x(static_cast<long>(c)) =
        (std::conj(b(i, j)) * u_(i, j)).real() - (std::conj(b(j, i)) * u_(j, i)).real();
  }
  return x;
}

PhasePattern pattern_from_coefficients(int n, const std::vector<Pair>& columns, const VecR& x) {
  PhasePattern p{MatR::Zero(n, n)};
  for (size_t c = 0; c < columns.size(); ++c) {
    p.r(columns[c].first, columns[c].second) = x(static_cast<long>(c));
    p.r(columns[c].second, columns[c].first) = -x(static_cast<long>(c));
  }
  return p;
}

VecR coefficients_from_pattern(const std::vector<Pair>& columns, const PhasePattern& p) {
  VecR x(static_cast<long>(columns.size()));
  for (size_t c = 0; c < columns.size(); ++c) {
    x(static_cast<long>(c)) = p.r(columns[c].first, columns[c].second);
  }
  return x;
}

RankResult system_rank(const MatC& u, const std::vector<Pair>& columns, const DefectOptions& opt,
                       std::string* method, bool* complete) {
  const int n = static_cast<int>(u.rows());
  const long rows = static_cast<long>(n) * (n - 1);
  const long cols = static_cast<long>(columns.size());
  if (complete != nullptr) *complete = true;
  if (cols == 0) {
    if (method != nullptr) *method = "empty";
    return RankResult{};
  }
  RankMethod m = opt.method;
  if (m == RankMethod::Auto) {
    const double dense = 8.0 * static_cast<double>(rows) * static_cast<double>(cols);
    const double tri = 8.0 * static_cast<double>(cols) * static_cast<double>(cols);
    if (dense <= opt.dense_bytes) {
      m = RankMethod::Dense;
    } else if (!opt.long_running) {
      throw std::runtime_error("system of " + std::to_string(rows) + " x " + std::to_string(cols) +
                               " needs the long-running mode");
    } else {
      m = tri <= 2.0 * opt.dense_bytes ? RankMethod::Streaming : RankMethod::Lanczos;
    }
  }
  Assembler asm_(u, columns);
  if (m == RankMethod::Dense) {
    if (method != nullptr) *method = "dense-svd";
    MatR a(rows, cols);
    asm_.fill(0, asm_.equations(), a);
    return rank_from_svals(singular_values(std::move(a)), opt.tol);
  }
  if (m == RankMethod::Streaming) {
    if (method != nullptr) *method = "streaming-qr";
    StreamingTriangle tri(static_cast<int>(cols));
    const long step = 256;
    MatR block(2 * step, cols);
    for (long p = 0; p < asm_.equations(); p += step) {
      const long p1 = std::min(asm_.equations(), p + step);
      asm_.fill(p, p1, block);
      tri.add_rows(block);
    }
    return rank_from_svals(tri.singular_values(), opt.tol);
  }
  if (method != nullptr) *method = "lanczos";
  const SystemOperator op(u, columns);
  const LanczosResult lz = lanczos_extremes([&](const VecR& x) { return op.apply_normal(x); },
                                            static_cast<int>(cols), opt.lanczos_count, 4000, 1e-10,
                                            0x5eed);
  std::vector<double> svals;
  svals.push_back(std::sqrt(std::max(lz.largest, 0.0)));
  for (double e : lz.smallest) svals.push_back(std::sqrt(std::max(e, 0.0)));
  RankResult rr = rank_from_svals(svals, opt.tol);
  // Only the extremes are known: rank is cols minus the computed values below threshold.
  const int below = static_cast<int>(svals.size()) - rr.rank;
  rr.rank = static_cast<int>(cols) - below;
  if (complete != nullptr) *complete = lz.converged && below == 0;
  return rr;
}

MatR gauge_subspace(int n, const std::vector<Pair>& support, GaugeChoice gauge) {
  const std::vector<Pair> cols = system_columns(n, support, gauge);
  // Admissible theta: theta_j = theta_row for every fixed pair.
  std::vector<Pair> fixed;
  for (const auto& p : support) {
    if (gauge.fixed() && (p.first == gauge.row || p.second == gauge.row)) fixed.push_back(p);
  }
  MatR theta;
  if (fixed.empty()) {
    theta = MatR::Identity(n, n);
  } else {
    MatR c = MatR::Zero(static_cast<long>(fixed.size()), n);
    for (size_t i = 0; i < fixed.size(); ++i) {
      c(static_cast<long>(i), fixed[i].first) = -1.0;
      c(static_cast<long>(i), fixed[i].second) = 1.0;
    }
    const RightSvd svd = svd_right(c);
    const RankResult rr = rank_from_svals(svd.svals, 1e-10);
    theta = svd.v.rightCols(n - rr.rank);
  }
  MatR dmat = MatR::Zero(static_cast<long>(cols.size()), n);
  for (size_t i = 0; i < cols.size(); ++i) {
    dmat(static_cast<long>(i), cols[i].first) = -1.0;
    dmat(static_cast<long>(i), cols[i].second) = 1.0;
  }
  return orthonormal_range(dmat * theta, 1e-10, 1e-10);
}

MatR gauge_subspace(const HermitianUnitary& u, GaugeChoice gauge) {
  return gauge_subspace(u.n, u.support, gauge);
}

DefectReport restricted_defect(const HermitianUnitary& u, const DefectOptions& opt) {
  DefectReport rep;
  const SupportCounts sc = support_and_counts(u, opt.gauge);
  rep.n = u.n;
  rep.d = u.d;
  rep.z = sc.z;
  rep.tau_paper = sc.tau_paper;
  rep.tau_effective = sc.tau_effective;
  rep.support_size = static_cast<int>(sc.support.size());
  rep.row_degree = sc.row_degree;
  rep.gauge_row = opt.gauge.row;
  rep.rows = static_cast<long>(u.n) * (u.n - 1);
  rep.tol = opt.tol;
  const std::vector<Pair> cols = system_columns(u.n, u.support, opt.gauge);
  const RankResult rr = system_rank(u.entries, cols, opt, &rep.method, &rep.complete);
  rep.r = rr.rank;
  rep.svals = rr.svals;
  rep.sigma_max = rr.sigma_max;
  rep.gap_index = rr.gap_index;
  rep.gap_log10 = rr.gap_log10;
  rep.nullity = rep.tau_effective - rep.r;
  rep.delta_paper = rep.tau_paper - rep.r;
  rep.delta_consistent = rep.tau_paper >= rep.r;
  const MatR g = gauge_subspace(u, opt.gauge);
  rep.gauge_dim = static_cast<int>(g.cols());
  if (g.cols() > 0) {
    const SystemOperator op(u.entries, cols);
    for (long i = 0; i < g.cols(); ++i) {
      rep.gauge_residual = std::max(rep.gauge_residual, op.apply(g.col(i)).norm());
    }
  }
  rep.free_parameters = rep.nullity - rep.gauge_dim;
  return rep;
}

MatR kernel_coefficients(const LinearSystem& sys, double tol) {
  if (sys.matrix.cols() == 0) return MatR(0, 0);
  const RightSvd svd = svd_right(sys.matrix);
  const RankResult rr = rank_from_svals(svd.svals, tol);
  return svd.v.rightCols(static_cast<long>(svd.svals.size()) - rr.rank);
}

std::vector<PhasePattern> kernel_basis(const LinearSystem& sys, double tol) {
  const MatR k = kernel_coefficients(sys, tol);
  std::vector<PhasePattern> out;
  for (long i = 0; i < k.cols(); ++i) {
    out.push_back(pattern_from_coefficients(sys.n, sys.col_index, k.col(i)));
  }
  return out;
}

int subspace_intersection_dim(const MatR& a, const MatR& b, double tol) {
  if (a.cols() == 0 || b.cols() == 0) return 0;
  const std::vector<double> s = singular_values(MatR(a.transpose() * b));
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](double x) { return x > 1.0 - tol; }));
}

int free_parameters(const HermitianUnitary& u, const DefectOptions& opt) {
  const LinearSystem sys = build_linear_system(u, opt.gauge);
  const MatR k = kernel_coefficients(sys, opt.tol);
  const MatR g = gauge_subspace(u, opt.gauge);
  return static_cast<int>(k.cols()) - subspace_intersection_dim(k, g);
}

HermitianUnitary transform_unitary(const HermitianUnitary& u, const std::vector<int>& perm,
                                   const std::vector<double>& phases, double eps_zero) {
  const int n = u.n;
  if (static_cast<int>(perm.size()) != n || static_cast<int>(phases.size()) != n) {
    throw std::invalid_argument("transform_unitary: size mismatch");
  }
  HermitianUnitary out;
  out.n = n;
  out.d = u.d;
  out.entries.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int a = perm[static_cast<size_t>(i)];
      const int b = perm[static_cast<size_t>(j)];
      out.entries(i, j) = std::polar(1.0, phases[static_cast<size_t>(a)] - phases[static_cast<size_t>(b)]) *
                          u.entries(a, b);
    }
  }
  out.support = support_pattern(out.entries, eps_zero);
  return out;
}

bool defect_invariance_check(const HermitianUnitary& u, const std::vector<int>& perm,
                             const std::vector<double>& phases, const DefectOptions& opt) {
  const HermitianUnitary v = transform_unitary(u, perm, phases);
  DefectOptions open = opt;
  open.gauge = GaugeChoice::none();
  const DefectReport a = restricted_defect(u, open);
  const DefectReport b = restricted_defect(v, open);
  const DefectReport fa = restricted_defect(u, opt);
  const DefectReport fb = restricted_defect(v, opt);
  return a.z == b.z && a.r == b.r && a.nullity == b.nullity && a.gauge_dim == b.gauge_dim &&
         fa.free_parameters == fb.free_parameters && a.free_parameters == fa.free_parameters;
}

TableCounts table_counts_all_pairs(const HermitianUnitary& u, double tol) {
  DefectOptions opt;
  opt.tol = tol;
  opt.gauge = GaugeChoice::none();
  const DefectReport rep = restricted_defect(u, opt);
  TableCounts t;
  t.convention = "all-pairs";
  t.tau = u.n * (u.n - 1) / 2;
  t.r = rep.r + rep.z;
  t.delta = t.tau - t.r;
  return t;
}

TableCounts table_counts_support_fixed(const HermitianUnitary& u, double tol, int row) {
  DefectOptions opt;
  opt.tol = tol;
  opt.gauge = GaugeChoice{row};
  const DefectReport rep = restricted_defect(u, opt);
  TableCounts t;
  t.convention = "support-fixed";
  t.tau = rep.support_size;
  t.r = rep.r + rep.row_degree;
  t.delta = t.tau - t.r;
  return t;
}

}  // namespace isoframe
