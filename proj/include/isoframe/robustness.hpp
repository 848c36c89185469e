// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isoframe/defect.hpp"
#include "isoframe/types.hpp"

namespace isoframe {

// s = (1/sqrt d) max_j ||phi'_j - phi_j||
double inaccuracy_factor(const VectorSet& exact, const VectorSet& approx);

// Adds s * xi to the real and imaginary part of every entry, xi uniform in
// [-1, 1]; no renormalization.
VectorSet perturb_vectors(const VectorSet& v, double s, std::uint64_t seed);
VectorSet perturb_vectors(const VectorSet& v, double s, std::uint64_t seed, std::uint64_t stream_a,
                          std::uint64_t stream_b);

enum class BoundVariant { Appendix, MainText };

// Appendix: 2^6 d^{5/2} / N^2 (1 - 2d/N)^2 sqrt((N - d) / (d (N - 1)))
// MainText: 2^6 d^2 / N (1 - 2d/N)^2 sqrt((N - d) / (N (N - 1)))
double f_bound(int d, int n, BoundVariant variant = BoundVariant::Appendix);

struct ConfidenceRegion {
  double s_max = 0.0;
  double f = 0.0;
  bool valid = true;  // f * s < 0.1
};
ConfidenceRegion confidence_region(double sigma1, int d, int n, double s,
                                   BoundVariant variant = BoundVariant::Appendix);

// Smallest singular value above the rank cut of the defect system, with the
// nullity it was measured against. Uses Lanczos when the system is too large
// for a dense SVD.
struct SigmaOne {
  double sigma1 = 0.0;
  double sigma_max = 0.0;
  int nullity = 0;
  std::string method;
};
SigmaOne measure_sigma1(const HermitianUnitary& u, const DefectOptions& opt = {});

struct SweepOptions {
  std::vector<double> s_grid;
  int samples = 8;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  GaugeChoice gauge = GaugeChoice::none();
  BoundVariant variant = BoundVariant::Appendix;
  double povm_warn = 1e-2;
  int threads = 1;  // samples per s are split across workers; results do not depend on it
};

struct SweepPoint {
  double s = 0.0;
  double sigma0_mean = 0.0, sigma1_mean = 0.0;
  double sigma0_min = 0.0, sigma0_max = 0.0;
  double sigma1_min = 0.0, sigma1_max = 0.0;
  double povm_residual_max = 0.0;
  double unitarity_residual_max = 0.0;
};

struct RobustnessReport {
  std::string name;
  int d = 0;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int gauge_row = -1;
  int nullity = 0;
  double sigma1_reference = 0.0;
  double f_value = 0.0;
  double s_max_bound = 0.0;
  std::vector<SweepPoint> points;
  std::vector<std::string> warnings;
};

// Singular values of the system of a perturbed set, assembled on the support of
// the reference unitary. Descending.
std::vector<double> perturbed_singular_values(const VectorSet& approx,
                                              const HermitianUnitary& reference, GaugeChoice gauge);

RobustnessReport singular_sweep(const VectorSet& v, const SweepOptions& opt,
                                const std::string& name = "");
std::string robustness_csv(const RobustnessReport& rep);

// log-spaced grid from 10^lo to 10^hi with the given number of points
std::vector<double> log_grid(double lo_exp, double hi_exp, int points);

// Measured quantities of each step of the perturbation chain and the bound the
// derivation assigns to them.
struct ChainStep {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
};
std::vector<ChainStep> eigen_perturbation_chain(const VectorSet& exact, const VectorSet& approx,
                                                double s, GaugeChoice gauge = {});

}  // namespace isoframe
