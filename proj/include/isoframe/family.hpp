// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "isoframe/defect.hpp"
#include "isoframe/types.hpp"

namespace isoframe {

struct FamilyPoint {
  MatC v;
  double residual = 0.0;
};

// V_ij(t) = U_ij exp(i (offset_ij + t R_ij)); residual = ||V V^dag - I||_max.
FamilyPoint evaluate_family(const HermitianUnitary& u, const PhasePattern& r, double t);
FamilyPoint evaluate_family(const HermitianUnitary& u, const PhasePattern& offset,
                            const PhasePattern& r, double t);

// t_k = 2 pi k / points, k < points
std::vector<double> period_grid(int points = 256);

double verify_family(const HermitianUnitary& u, const PhasePattern& r,
                     const std::vector<double>& t_grid);
double verify_family(const HermitianUnitary& u, const PhasePattern& offset, const PhasePattern& r,
                     const std::vector<double>& t_grid);

struct FamilyCandidate {
  std::string label;
  PhasePattern offset;
  PhasePattern direction;
  VecR pivot_coefficients;  // direction in the pivot coordinates of the kernel
  std::vector<double> t_grid;
  std::vector<double> residual_profile;
  double max_residual = 0.0;
  bool passes = false;
};

struct KernelCoordinates {
  std::vector<Pair> columns;
  std::vector<Pair> pivots;  // 0-based pairs
  MatR basis;                // columns x dim, identity on the pivot rows
};

// Kernel expressed in pivot coordinates chosen by column-pivoted QR.
KernelCoordinates kernel_coordinates(const HermitianUnitary& u, double tol = 1e-8,
                                     GaugeChoice gauge = {});

struct FamilySearch {
  int kernel_dim = 0;
  std::vector<Pair> pivots;
  bool realness_vacuous = true;  // the real kernel needs no further constraint
  std::vector<FamilyCandidate> families;
  int candidates_tested = 0;
};

// Exact one-parameter families through U: primitive integer directions of the
// kernel lattice (pivot coordinates in [-range, range]) whose phase
// modulation stays unitary on the whole grid. Duplicated curves are merged.
FamilySearch find_integer_families(const HermitianUnitary& u, int range = 3, int points = 256,
                                   double family_tol = 1e-10);

// Families of the d = 3 SIC built on the fiducial (1, -1, 0)/sqrt 2.
HermitianUnitary sic3_unitary();
FamilySearch sic3_families(int points = 256, double family_tol = 1e-10);

// Distinct family curves through every unitary point U o exp(i pi/m B a) of the
// offset lattice (pivot coordinates a in {0..2m-1}).
struct LatticeExploration {
  int unitary_points = 0;
  int distinct_curves = 0;
  int curves_through_base = 0;
};
LatticeExploration explore_offset_lattice(const HermitianUnitary& u, int m, int range = 2,
                                          int points = 48, double family_tol = 1e-10);

// (k + 1)(k - 1)(k - 2) / 2 for prime k.
int etf_prime_delta(int k);

// Sorted Bargmann triple products G_ij G_jk G_ki over i < j < k in both
// orientations, rounded for comparison; invariant under enphasing and, as a
// multiset, under relabeling.
std::vector<cplx> triple_invariants(const MatC& gram);
double invariant_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Gram matrix of a unitary V with diagonal 1 - 2d/N.
MatC gram_of(const MatC& v, int d);

// CSV rows t,residual for a family.
std::string family_csv(const FamilyCandidate& f);

}  // namespace isoframe
