// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "isoframe/core.hpp"
#include "isoframe/kernels.hpp"
#include "isoframe/report_io.hpp"

namespace isoframe {

double inaccuracy_factor(const VectorSet& exact, const VectorSet& approx) {
  if (exact.d != approx.d || exact.size() != approx.size()) {
    throw std::invalid_argument("inaccuracy_factor: shape mismatch");
  }
  double worst = 0.0;
  for (int j = 0; j < exact.size(); ++j) {
    worst = std::max(worst, (approx.vectors.col(j) - exact.vectors.col(j)).norm());
  }
  return worst / std::sqrt(static_cast<double>(exact.d));
}

VectorSet perturb_vectors(const VectorSet& v, double s, std::uint64_t seed, std::uint64_t stream_a,
                          std::uint64_t stream_b) {
  if (s < 0.0) throw std::invalid_argument("perturb_vectors: s must be nonnegative");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_a), static_cast<std::uint32_t>(stream_b)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> xi(-1.0, 1.0);
  VectorSet out = v;
  for (int j = 0; j < v.size(); ++j) {
    for (int i = 0; i < v.d; ++i) {
      const double re = xi(rng);
      const double im = xi(rng);
      out.vectors(i, j) += s * cplx(re, im);
    }
  }
  return out;
}

VectorSet perturb_vectors(const VectorSet& v, double s, std::uint64_t seed) {
  return perturb_vectors(v, s, seed, 0, 0);
}

double f_bound(int d, int n, BoundVariant variant) {
  if (n <= 2 * d) throw std::invalid_argument("f_bound requires N > 2d");
  const double dd = d;
  const double nn = n;
  const double c = (1.0 - 2.0 * dd / nn) * (1.0 - 2.0 * dd / nn);
  if (variant == BoundVariant::Appendix) {
    return 64.0 * std::pow(dd, 2.5) / (nn * nn) * c * std::sqrt((nn - dd) / (dd * (nn - 1.0)));
  }
  return 64.0 * dd * dd / nn * c * std::sqrt((nn - dd) / (nn * (nn - 1.0)));
}

ConfidenceRegion confidence_region(double sigma1, int d, int n, double s, BoundVariant variant) {
  ConfidenceRegion out;
  out.f = f_bound(d, n, variant);
  out.s_max = (sigma1 + out.f * s) / (2.0 * out.f);
  out.valid = out.f * s < 0.1;
  return out;
}

SigmaOne measure_sigma1(const HermitianUnitary& u, const DefectOptions& opt) {
  SigmaOne out;
  const std::vector<Pair> cols = system_columns(u.n, u.support, opt.gauge);
  bool complete = true;
  const RankResult rr = system_rank(u.entries, cols, opt, &out.method, &complete);
  if (out.method == "lanczos") {
    // svals holds sigma_max followed by the few smallest values.
    out.sigma_max = rr.svals.front();
    std::vector<double> small(rr.svals.begin() + 1, rr.svals.end());
    std::sort(small.begin(), small.end());
    out.nullity = static_cast<int>(cols.size()) - rr.rank;
    if (static_cast<size_t>(out.nullity) >= small.size()) {
      throw std::runtime_error("measure_sigma1: nullity exceeds the computed spectrum");
    }
    out.sigma1 = small[static_cast<size_t>(out.nullity)];
    return out;
  }
  out.sigma_max = rr.sigma_max;
  out.nullity = static_cast<int>(cols.size()) - rr.rank;
  if (rr.rank == 0) throw std::runtime_error("measure_sigma1: zero system");
  out.sigma1 = rr.svals[static_cast<size_t>(rr.rank - 1)];
  return out;
}

std::vector<double> perturbed_singular_values(const VectorSet& approx,
                                              const HermitianUnitary& reference, GaugeChoice gauge) {
  const GramMatrix g = gram_from_vectors(approx);
  const HermitianUnitary u = unitary_from_gram(g, Tolerances{}, false);
  const LinearSystem sys = build_linear_system(u.entries, reference.support, gauge);
  return singular_values(sys.matrix);
}

std::vector<double> log_grid(double lo_exp, double hi_exp, int points) {
  if (points < 2 || !(hi_exp > lo_exp)) throw std::invalid_argument("log_grid: bad range");
  std::vector<double> g;
  for (int i = 0; i < points; ++i) {
    g.push_back(std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (points - 1)));
  }
  return g;
}

RobustnessReport singular_sweep(const VectorSet& v, const SweepOptions& opt,
                                const std::string& name) {
  if (opt.samples < 1) throw std::invalid_argument("singular_sweep: samples >= 1 required");
  RobustnessReport rep;
  rep.name = name;
  rep.d = v.d;
  rep.n = v.size();
  rep.samples = opt.samples;
  rep.seed = opt.seed;
  rep.tol = opt.tol;
  rep.gauge_row = opt.gauge.row;
  const HermitianUnitary ref = unitary_from_gram(gram_from_vectors(v));
  const LinearSystem sys0 = build_linear_system(ref, opt.gauge);
  const RankResult rr0 = rank_from_svals(singular_values(sys0.matrix), opt.tol);
  const int cols = static_cast<int>(sys0.col_index.size());
  rep.nullity = cols - rr0.rank;
  rep.sigma1_reference = rr0.svals[static_cast<size_t>(rr0.rank - 1)];
  if (rep.n > 2 * rep.d) {
    rep.f_value = f_bound(rep.d, rep.n, opt.variant);
    rep.s_max_bound = rep.sigma1_reference / (2.0 * rep.f_value);
  }
  for (size_t si = 0; si < opt.s_grid.size(); ++si) {
    const double s = opt.s_grid[si];
    SweepPoint pt;
    pt.s = s;
    pt.sigma0_min = pt.sigma1_min = 1e300;
    struct Sample {
      double s0 = 0.0, s1 = 0.0, povm = 0.0, unit = 0.0;
    };
    std::vector<Sample> res(static_cast<size_t>(opt.samples));
    auto run = [&](int k) {
      const VectorSet w = perturb_vectors(v, s, opt.seed, si, static_cast<std::uint64_t>(k));
      const GramMatrix g = gram_from_vectors(w);
      const HermitianUnitary u = unitary_from_gram(g, Tolerances{}, false);
      const LinearSystem sys = build_linear_system(u.entries, ref.support, opt.gauge);
      std::vector<double> sv = singular_values(sys.matrix);
      sv.resize(static_cast<size_t>(cols), 0.0);
      std::sort(sv.begin(), sv.end());
      Sample& out = res[static_cast<size_t>(k)];
      out.s0 = rep.nullity > 0 ? sv[static_cast<size_t>(rep.nullity - 1)] : 0.0;
      out.s1 = sv[static_cast<size_t>(rep.nullity)];
      out.povm = povm_residual(g);
      out.unit = unitarity_residual(u.entries);
    };
    const int workers = std::clamp(opt.threads, 1, opt.samples);
    if (workers == 1) {
      for (int k = 0; k < opt.samples; ++k) run(k);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (int k = w; k < opt.samples; k += workers) run(k);
        });
      }
      for (auto& t : pool) t.join();
    }
    for (const Sample& x : res) {
      pt.povm_residual_max = std::max(pt.povm_residual_max, x.povm);
      pt.unitarity_residual_max = std::max(pt.unitarity_residual_max, x.unit);
      pt.sigma0_mean += x.s0 / opt.samples;
      pt.sigma1_mean += x.s1 / opt.samples;
      pt.sigma0_min = std::min(pt.sigma0_min, x.s0);
      pt.sigma0_max = std::max(pt.sigma0_max, x.s0);
      pt.sigma1_min = std::min(pt.sigma1_min, x.s1);
      pt.sigma1_max = std::max(pt.sigma1_max, x.s1);
    }
    if (pt.povm_residual_max > opt.povm_warn) {
      std::ostringstream msg;
      msg << "s=" << s << ": perturbed Gram violates the POVM property by " << pt.povm_residual_max
          << "; unitarity deviation " << pt.unitarity_residual_max;
      rep.warnings.push_back(msg.str());
    }
    rep.points.push_back(pt);
  }
  return rep;
}

std::string robustness_csv(const RobustnessReport& rep) {
  std::ostringstream out;
  out << "# structure=" << rep.name << "\n"
      << "# d=" << rep.d << "\n"
      << "# N=" << rep.n << "\n"
      << "# samples=" << rep.samples << "\n"
      << "# seed=" << rep.seed << "\n"
      << "# tol=" << format_double(rep.tol) << "\n"
      << "# gauge_row=" << rep.gauge_row << "\n"
      << "# nullity=" << rep.nullity << "\n"
      << "# sigma1_reference=" << format_double(rep.sigma1_reference) << "\n"
      << "# f_value=" << format_double(rep.f_value) << "\n"
      << "# s_max_bound=" << format_double(rep.s_max_bound) << "\n"
      << "# simd=" << kernels::isa_name(kernels::active_isa()) << "\n";
  for (const auto& w : rep.warnings) out << "# warning: " << w << "\n";
  out << "s,sigma0_mean,sigma1_mean,sigma0_min,sigma0_max,sigma1_min,sigma1_max\n";
  for (const auto& p : rep.points) {
    out << format_double(p.s) << ',' << format_double(p.sigma0_mean) << ','
        << format_double(p.sigma1_mean) << ',' << format_double(p.sigma0_min) << ','
        << format_double(p.sigma0_max) << ',' << format_double(p.sigma1_min) << ','
        << format_double(p.sigma1_max) << "\n";
  }
  return out.str();
}

std::vector<ChainStep> eigen_perturbation_chain(const VectorSet& exact, const VectorSet& approx,
                                                double s, GaugeChoice gauge) {
  const int d = exact.d;
  const int n = exact.size();
  const double dd = d;
  const double nn = n;
  const GramMatrix g0 = gram_from_vectors(exact);
  const GramMatrix g1 = gram_from_vectors(approx);
  const HermitianUnitary u0 = unitary_from_gram(g0);
  const HermitianUnitary u1 = unitary_from_gram(g1, Tolerances{}, false);
  std::vector<ChainStep> out;

  const double dg = kernels::max_abs_diff(g0.entries.data(), g1.entries.data(),
                                          static_cast<std::size_t>(g0.entries.size()));
  out.push_back({"dG", dg, 2.0 * std::sqrt(dd) * s});

  double du = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) du = std::max(du, std::abs(u1.entries(i, j) - u0.entries(i, j)));
    }
  }
  out.push_back({"dU", du, 4.0 * std::pow(dd, 1.5) * s / nn});

  const MatR r0 = build_linear_system(u0.entries, u0.support, gauge).matrix;
  const MatR r1 = build_linear_system(u1.entries, u0.support, gauge).matrix;
  const MatR dr = r1 - r0;
  out.push_back({"dR", dr.cwiseAbs().maxCoeff(), 8.0 * std::pow(dd, 1.5) / nn * (1.0 - 2.0 * dd / nn) * s});

  const MatR n0 = r0.transpose() * r0;
  const MatR n1 = r1.transpose() * r1;
  const MatR dn = n1 - n0;
  const double f = n > 2 * d ? f_bound(d, n) : 0.0;
  out.push_back({"dRtR", dn.cwiseAbs().maxCoeff(), f * s});

  const std::vector<double> dn_sv = singular_values(dn);
  out.push_back({"gerschgorin", dn_sv.front(), dn.cwiseAbs().sum()});

  Eigen::SelfAdjointEigenSolver<MatR> e0(n0, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<MatR> e1(n1, Eigen::EigenvaluesOnly);
  out.push_back({"lambda", (e1.eigenvalues() - e0.eigenvalues()).cwiseAbs().maxCoeff(), f * s});

  std::vector<double> s0 = singular_values(r0);
  std::vector<double> s1 = singular_values(r1);
  double ds = 0.0;
  for (size_t i = 0; i < s0.size(); ++i) ds = std::max(ds, std::abs(s1[i] - s0[i]));
  out.push_back({"sigma", ds, f * s});
  return out;
}

}  // namespace isoframe
