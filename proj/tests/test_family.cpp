// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "isoframe/constructions.hpp"
#include "isoframe/core.hpp"
#include "isoframe/family.hpp"

namespace isoframe {
namespace {

PhasePattern gauge_pattern(const HermitianUnitary& u, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> th(-3.0, 3.0);
  std::vector<double> theta(static_cast<size_t>(u.n));
  for (double& t : theta) t = th(rng);
  PhasePattern p{MatR::Zero(u.n, u.n)};
  for (const auto& [a, b] : u.support) {
    p.r(a, b) = theta[static_cast<size_t>(b)] - theta[static_cast<size_t>(a)];
    p.r(b, a) = -p.r(a, b);
  }
  return p;
}

double max_abs(const MatC& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Family, ZeroParameterIsBase) {
  const HermitianUnitary u = sic3_unitary();
  const FamilyPoint p = evaluate_family(u, gauge_pattern(u, 1), 0.0);
  EXPECT_EQ(max_abs(p.v - u.entries), 0.0);
  EXPECT_LE(p.residual, 1e-10);
}

TEST(Family, GaugeDirectionsAlwaysPass) {
  for (const auto& spec : std::vector<std::vector<std::string>>{
           {"mub", "4"}, {"sic", "4"}, {"ks", "cabello-18"}, {"etf-fourier", "4"}}) {
    const HermitianUnitary u = make_structure(spec).unitary;
    EXPECT_LE(verify_family(u, gauge_pattern(u, 3), period_grid(64)), 1e-10) << spec[0];
  }
}

TEST(Family, SicD3KernelAndFamilies) {
  const FamilySearch fs = sic3_families();
  EXPECT_EQ(fs.kernel_dim, 4);
  EXPECT_TRUE(fs.realness_vacuous);
  EXPECT_EQ(fs.pivots.size(), 4u);
  ASSERT_EQ(fs.families.size(), 4u);
  EXPECT_GT(fs.candidates_tested, static_cast<int>(fs.families.size()));
  for (const auto& f : fs.families) {
    EXPECT_TRUE(f.passes);
    EXPECT_LE(f.max_residual, 1e-10);
    EXPECT_EQ(f.t_grid.size(), 256u);
    EXPECT_EQ(f.residual_profile.size(), 256u);
  }
}

TEST(Family, SicD3MemberAtFixedParameter) {
  const HermitianUnitary u = sic3_unitary();
  const FamilySearch fs = sic3_families(16);
  ASSERT_FALSE(fs.families.empty());
  EXPECT_LE(evaluate_family(u, fs.families.front().direction, 0.37).residual, 1e-10);
}

TEST(Family, DirectionsLieInKernel) {
  const HermitianUnitary u = sic3_unitary();
  const LinearSystem sys = build_linear_system(u);
  for (const auto& f : sic3_families(16).families) {
    EXPECT_LE((sys.matrix * coefficients_from_pattern(sys.col_index, f.direction)).norm(), 1e-10);
  }
}

TEST(Family, MembersStayEquiangular) {
  const HermitianUnitary u = sic3_unitary();
  const SymmetryMatrix s = symmetry_etf(3, 9);
  for (const auto& f : sic3_families(16).families) {
    for (double t : period_grid(12)) {
      const FamilyPoint p = evaluate_family(u, f.direction, t);
      const VectorSet v = vectors_from_gram(GramMatrix{gram_of(p.v, 3), 3});
      EXPECT_LE(verify_symmetry(v, s), 1e-12);
      EXPECT_LE(verify_povm(v), 1e-12);
    }
  }
}

TEST(Family, GenericKernelDirectionFails) {
  const HermitianUnitary u = sic3_unitary();
  const KernelCoordinates kc = kernel_coordinates(u);
  ASSERT_EQ(kc.basis.cols(), 4);
  VecR c(4);
  c << 1.0, 0.5, -0.25, 0.75;
  const PhasePattern dir = pattern_from_coefficients(u.n, kc.columns, kc.basis * c);
  EXPECT_GT(verify_family(u, dir, period_grid(64)), 1e-4);
  EXPECT_LE(evaluate_family(u, dir, 1e-6).residual, 1e-10);
}

TEST(Family, KernelCoordinatesHaveIdentityPivots) {
  const KernelCoordinates kc = kernel_coordinates(sic3_unitary());
  for (size_t i = 0; i < kc.pivots.size(); ++i) {
    const auto it = std::find(kc.columns.begin(), kc.columns.end(), kc.pivots[i]);
    ASSERT_NE(it, kc.columns.end());
    const long row = it - kc.columns.begin();
    for (long j = 0; j < kc.basis.cols(); ++j) {
      EXPECT_NEAR(kc.basis(row, j), static_cast<long>(i) == j ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(Family, FamiliesAreEquivalentByInvariants) {
  const HermitianUnitary u = sic3_unitary();
  const FamilySearch fs = sic3_families(16);
  const std::vector<double> fine = period_grid(256);
  for (size_t a = 0; a < fs.families.size(); ++a) {
    for (size_t b = 0; b < fs.families.size(); ++b) {
      for (double t : period_grid(8)) {
        const auto ia = triple_invariants(gram_of(evaluate_family(u, fs.families[a].direction, t).v, 3));
        double best = 1e300;
        for (double s : fine) {
          const auto ib = triple_invariants(gram_of(evaluate_family(u, fs.families[b].direction, s).v, 3));
          best = std::min(best, invariant_distance(ia, ib));
        }
        EXPECT_LE(best, 1e-8) << a << " vs " << b << " at t=" << t;
      }
    }
  }
}

TEST(Family, InvariantsSeparateInequivalentSets) {
  const auto a = triple_invariants(gram_from_vectors(sic_weyl_heisenberg(sic_fiducial(3))).entries);
  EXPECT_EQ(a.size(), 2u * 84u);
  EXPECT_EQ(invariant_distance(a, a), 0.0);
  EXPECT_GT(invariant_distance(a, triple_invariants(MatC::Identity(9, 9))), 0.01);
  EXPECT_GT(invariant_distance(a, triple_invariants(MatC::Identity(4, 4))), 1e100);
}

TEST(Family, OffsetLatticeKeepsBaseCurves) {
  const HermitianUnitary u = sic3_unitary();
  for (int m : {2, 3}) {
    const LatticeExploration lat = explore_offset_lattice(u, m);
    EXPECT_GE(lat.unitary_points, 1);
    EXPECT_EQ(lat.curves_through_base, 4);
    EXPECT_GE(lat.distinct_curves, lat.curves_through_base);
  }
}

TEST(Family, IsolatedStructureHasNoCandidates) {
  const FamilySearch fs = find_integer_families(make_structure({"sic", "4"}).unitary);
  EXPECT_EQ(fs.kernel_dim, 0);
  EXPECT_TRUE(fs.families.empty());
}

TEST(EtfDelta, ClosedForm) {
  EXPECT_EQ(etf_prime_delta(2), 0);
  EXPECT_EQ(etf_prime_delta(3), 4);
  EXPECT_EQ(etf_prime_delta(5), 36);
  EXPECT_EQ(etf_prime_delta(7), 120);
  EXPECT_EQ(etf_prime_delta(11), 540);
  EXPECT_EQ(etf_prime_delta(13), 924);
  EXPECT_THROW(etf_prime_delta(4), std::invalid_argument);
  EXPECT_THROW(etf_prime_delta(9), std::invalid_argument);
}

TEST(EtfDelta, AgreesWithComputedDefect) {
  for (int k : {2, 3, 5, 7}) {
    EXPECT_EQ(restricted_defect(etf_fourier_unitary(k)).delta_paper, etf_prime_delta(k)) << k;
  }
}

TEST(Family, CsvExport) {
  const FamilySearch fs = sic3_families(8);
  ASSERT_FALSE(fs.families.empty());
  const std::string csv = family_csv(fs.families.front());
  EXPECT_NE(csv.find("t,residual\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3 + 8);
}

}  // namespace
}  // namespace isoframe
