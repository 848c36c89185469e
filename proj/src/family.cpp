// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "isoframe/constructions.hpp"
#include "isoframe/core.hpp"
#include "isoframe/galois.hpp"
#include "isoframe/report_io.hpp"

namespace isoframe {

namespace {

constexpr double kPi = std::numbers::pi;

MatC modulate(const MatC& u, const MatR& phase) {
  MatC v(u.rows(), u.cols());
  for (long j = 0; j < u.cols(); ++j) {
    for (long i = 0; i < u.rows(); ++i) v(i, j) = u(i, j) * std::polar(1.0, phase(i, j));
  }
  return v;
}

using Curve = std::vector<MatC>;

Curve sample_curve(const HermitianUnitary& u, const PhasePattern& offset, const PhasePattern& r,
                   const std::vector<double>& grid) {
  Curve c;
  for (double t : grid) c.push_back(modulate(u.entries, offset.r + t * r.r));
  return c;
}

bool same_curve(const Curve& a, const Curve& b, double tol) {
  for (const MatC& x : b) {
    bool hit = false;
    for (const MatC& y : a) {
      if ((x - y).cwiseAbs().maxCoeff() < tol) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool on_curve(const Curve& a, const MatC& x, double tol) {
  return std::any_of(a.begin(), a.end(),
                     [&](const MatC& y) { return (x - y).cwiseAbs().maxCoeff() < tol; });
}

// Odometer over {lo..hi}^dim.
bool next_tuple(std::vector<int>& c, int lo, int hi) {
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] < hi) {
      ++c[i];
      return true;
    }
    c[i] = lo;
  }
  return false;
}

bool primitive_positive(const std::vector<int>& c) {
  int g = 0;
  int first = 0;
  for (int x : c) {
    g = std::gcd(g, std::abs(x));
    if (first == 0) first = x;
  }
  return g == 1 && first > 0;
}

std::string pairs_label(const VecR& c) {
  std::ostringstream out;
  out << "[";
  for (long i = 0; i < c.size(); ++i) out << (i ? "," : "") << std::lround(c(i));
  out << "]";
  return out.str();
}

}  // namespace

FamilyPoint evaluate_family(const HermitianUnitary& u, const PhasePattern& offset,
                            const PhasePattern& r, double t) {
  FamilyPoint p;
  p.v = modulate(u.entries, offset.r + t * r.r);
  p.residual = unitarity_residual(p.v);
  return p;
}

FamilyPoint evaluate_family(const HermitianUnitary& u, const PhasePattern& r, double t) {
  return evaluate_family(u, PhasePattern{MatR::Zero(u.n, u.n)}, r, t);
}

std::vector<double> period_grid(int points) {
  std::vector<double> g;
  for (int k = 0; k < points; ++k) g.push_back(2.0 * kPi * k / points);
  return g;
}

double verify_family(const HermitianUnitary& u, const PhasePattern& offset, const PhasePattern& r,
                     const std::vector<double>& t_grid) {
  double worst = 0.0;
  for (double t : t_grid) worst = std::max(worst, evaluate_family(u, offset, r, t).residual);
  return worst;
}

double verify_family(const HermitianUnitary& u, const PhasePattern& r,
                     const std::vector<double>& t_grid) {
  return verify_family(u, PhasePattern{MatR::Zero(u.n, u.n)}, r, t_grid);
}

KernelCoordinates kernel_coordinates(const HermitianUnitary& u, double tol, GaugeChoice gauge) {
  const LinearSystem sys = build_linear_system(u, gauge);
  KernelCoordinates kc;
  kc.columns = sys.col_index;
  const MatR k = kernel_coefficients(sys, tol);
  const long dim = k.cols();
  if (dim == 0) {
    kc.basis = MatR(k.rows(), 0);
    return kc;
  }
  // First linearly independent rows, scanning columns in lexicographic order.
  std::vector<long> piv;
  MatR chosen(0, dim);
  for (long i = 0; i < k.rows() && static_cast<long>(piv.size()) < dim; ++i) {
    MatR trial(chosen.rows() + 1, dim);
    trial << chosen, k.row(i);
    const std::vector<double> s = singular_values(MatR(trial));
    if (s.back() > 1e-6 * s.front()) {
      chosen = trial;
      piv.push_back(i);
    }
  }
  kc.basis = k * chosen.inverse();
  for (long i : piv) kc.pivots.push_back(kc.columns[static_cast<size_t>(i)]);
  return kc;
}

FamilySearch find_integer_families(const HermitianUnitary& u, int range, int points,
                                   double family_tol) {
  FamilySearch out;
  const KernelCoordinates kc = kernel_coordinates(u);
  out.kernel_dim = static_cast<int>(kc.basis.cols());
  out.pivots = kc.pivots;
  // The system is real, so its kernel already consists of real phase patterns.
  out.realness_vacuous = true;
  if (out.kernel_dim == 0) return out;
  const std::vector<double> grid = period_grid(points);
  const std::vector<double> coarse = period_grid(16);
  const PhasePattern zero{MatR::Zero(u.n, u.n)};
  std::vector<Curve> curves;
  std::vector<int> c(static_cast<size_t>(out.kernel_dim), -range);
  do {
    if (!primitive_positive(c)) continue;
    VecR coeff(out.kernel_dim);
    for (int i = 0; i < out.kernel_dim; ++i) coeff(i) = c[static_cast<size_t>(i)];
    const VecR x = kc.basis * coeff;
    if ((x - x.array().round().matrix()).cwiseAbs().maxCoeff() > 1e-8) continue;
    ++out.candidates_tested;
    const PhasePattern dir = pattern_from_coefficients(u.n, kc.columns, x.array().round().matrix());
    if (verify_family(u, dir, coarse) > family_tol) continue;
    FamilyCandidate f;
    f.offset = zero;
    f.direction = dir;
    f.pivot_coefficients = coeff;
    f.t_grid = grid;
    for (double t : grid) {
      const double r = evaluate_family(u, dir, t).residual;
      f.residual_profile.push_back(r);
      f.max_residual = std::max(f.max_residual, r);
    }
    f.passes = f.max_residual <= family_tol;
    if (!f.passes) continue;
    Curve curve = sample_curve(u, zero, dir, period_grid(48));
    if (std::any_of(curves.begin(), curves.end(),
                    [&](const Curve& o) { return same_curve(o, curve, 1e-9); })) {
      continue;
    }
    curves.push_back(std::move(curve));
    f.label = "F" + std::to_string(out.families.size() + 1) + " " + pairs_label(coeff);
    out.families.push_back(std::move(f));
  } while (next_tuple(c, -range, range));
  return out;
}

HermitianUnitary sic3_unitary() {
  VecC f(3);
  f << 1.0, -1.0, 0.0;
  f /= std::sqrt(2.0);
  return unitary_from_gram(gram_from_vectors(sic_weyl_heisenberg(f)));
}

FamilySearch sic3_families(int points, double family_tol) {
  return find_integer_families(sic3_unitary(), 3, points, family_tol);
}

LatticeExploration explore_offset_lattice(const HermitianUnitary& u, int m, int range, int points,
                                          double family_tol) {
  LatticeExploration out;
  const KernelCoordinates kc = kernel_coordinates(u);
  const int dim = static_cast<int>(kc.basis.cols());
  if (dim == 0) return out;
  const std::vector<double> grid = period_grid(points);
  std::vector<Curve> curves;
  std::vector<int> a(static_cast<size_t>(dim), 0);
  do {
    VecR coeff(dim);
    for (int i = 0; i < dim; ++i) coeff(i) = a[static_cast<size_t>(i)];
    const PhasePattern offset =
        pattern_from_coefficients(u.n, kc.columns, (kPi / m) * (kc.basis * coeff));
    HermitianUnitary w = u;
    w.entries = modulate(u.entries, offset.r);
    if (unitarity_residual(w.entries) > family_tol) continue;
    ++out.unitary_points;
    w.support = support_pattern(w.entries, Tolerances{}.zero);
    const FamilySearch local = find_integer_families(w, range, 16, family_tol);
    for (const auto& f : local.families) {
      PhasePattern total_offset = offset;
      Curve curve = sample_curve(u, total_offset, f.direction, grid);
      if (std::any_of(curves.begin(), curves.end(),
                      [&](const Curve& o) { return same_curve(o, curve, 1e-9); })) {
        continue;
      }
      if (on_curve(curve, u.entries, 1e-9)) ++out.curves_through_base;
      curves.push_back(std::move(curve));
    }
  } while (next_tuple(a, 0, 2 * m - 1));
  out.distinct_curves = static_cast<int>(curves.size());
  return out;
}

int etf_prime_delta(int k) {
  if (!galois::is_prime(k)) throw std::invalid_argument("etf_prime_delta: k must be prime");
  return (k + 1) * (k - 1) * (k - 2) / 2;
}

std::vector<cplx> triple_invariants(const MatC& gram) {
  std::vector<cplx> out;
  const long n = gram.rows();
  auto snap = [](double x) { return std::round(x * 1e9) / 1e9; };
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      for (long k = j + 1; k < n; ++k) {
        // Reversing the cycle conjugates the product, so both orientations are kept.
        const cplx t = gram(i, j) * gram(j, k) * gram(k, i);
        out.emplace_back(snap(t.real()), snap(t.imag()));
        out.emplace_back(snap(t.real()), snap(-t.imag()));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const cplx& a, const cplx& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  return out;
}

double invariant_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return 1e300;
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

MatC gram_of(const MatC& v, int d) {
  const long n = v.rows();
  return (static_cast<double>(n) / (2.0 * d)) * (MatC::Identity(n, n) - v);
}

std::string family_csv(const FamilyCandidate& f) {
  std::ostringstream out;
  out << "# family=" << f.label << "\n# max_residual=" << format_double(f.max_residual) << "\n";
  out << "t,residual\n";
  for (size_t i = 0; i < f.t_grid.size(); ++i) {
    out << format_double(f.t_grid[i]) << ',' << format_double(f.residual_profile[i]) << "\n";
  }
  return out.str();
}

}  // namespace isoframe
