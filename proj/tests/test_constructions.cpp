// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "isoframe/constructions.hpp"
#include "isoframe/core.hpp"
#include "isoframe/galois.hpp"

namespace isoframe {
namespace {

double max_unbiasedness_error(const std::vector<MatC>& bases) {
  const int d = static_cast<int>(bases.front().rows());
  double worst = 0.0;
  for (size_t a = 0; a < bases.size(); ++a) {
    worst = std::max(worst, (bases[a].adjoint() * bases[a] - MatC::Identity(d, d)).cwiseAbs().maxCoeff());
    for (size_t b = a + 1; b < bases.size(); ++b) {
      const MatC o = bases[a].adjoint() * bases[b];
      worst = std::max(worst, (o.cwiseAbs2().array() - 1.0 / d).abs().maxCoeff());
    }
  }
  return worst;
}

class MubDims : public ::testing::TestWithParam<int> {};

TEST_P(MubDims, CompleteAndUnbiased) {
  const int d = GetParam();
  const auto bases = mub_bases(d);
  EXPECT_EQ(static_cast<int>(bases.size()), d + 1);
  EXPECT_LE(max_unbiasedness_error(bases), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Dims, MubDims, ::testing::Values(2, 3, 4, 5, 7, 8, 9, 11, 16));

TEST(Mub, AlternatePolynomialsAlsoUnbiased) {
  EXPECT_LE(max_unbiasedness_error(mub_prime_power(2, alternate_mub_polynomial(2, 3))), 1e-12);
  EXPECT_LE(max_unbiasedness_error(mub_prime_power(3, alternate_mub_polynomial(3, 2))), 1e-12);
  EXPECT_LE(max_unbiasedness_error(mub_prime_power(2, alternate_mub_polynomial(2, 4))), 1e-12);
  EXPECT_THROW(alternate_mub_polynomial(2, 2), std::invalid_argument);
}

TEST(Mub, UnsupportedDimension) {
  EXPECT_THROW(mub_bases(6), std::invalid_argument);
  EXPECT_THROW(mub_bases(12), std::invalid_argument);
}

TEST(Galois, HenselLiftOfX3PlusXPlus1) {
  // x^3 + x + 1 lifts to x^3 + 2x^2 + x + 3 over Z_4
  const galois::Poly h = galois::hensel_lift({1, 1, 0, 1});
  EXPECT_EQ(h, (galois::Poly{3, 1, 2, 1}));
  const auto t = galois::teichmuller_set(h);
  EXPECT_EQ(t.size(), 8u);
  // closed under multiplication
  for (const auto& a : t) {
    for (const auto& b : t) {
      const auto c = galois::mul_mod(a, b, h, 4);
      EXPECT_NE(std::find(t.begin(), t.end(), c), t.end());
    }
  }
}

TEST(Galois, FieldTraceIsBalanced) {
  const galois::Poly f{1, 0, 1};  // x^2 + 1 over GF(3)
  const auto els = galois::field_elements(3, 2);
  ASSERT_EQ(els.size(), 9u);
  std::vector<int> hist(3, 0);
  for (const auto& e : els) ++hist[static_cast<size_t>(galois::trace(e, f, 3))];
  EXPECT_EQ(hist, (std::vector<int>{3, 3, 3}));
  EXPECT_TRUE(galois::is_prime(13));
  EXPECT_FALSE(galois::is_prime(9));
  EXPECT_FALSE(galois::is_prime(1));
}

class SicDims : public ::testing::TestWithParam<int> {};

TEST_P(SicDims, EquiangularTightFrame) {
  const int d = GetParam();
  double acc = 0.0;
  const VecC f = sic_fiducial(d, &acc);
  EXPECT_NEAR(f.norm(), 1.0, 1e-14);
  const VectorSet v = sic_weyl_heisenberg(f);
  EXPECT_EQ(v.size(), d * d);
  EXPECT_LE(verify_symmetry(v, symmetry_etf(d, d * d)), 1e-13);
  EXPECT_LE(verify_povm(v), 1e-12);
  if (d > 3) EXPECT_LE(acc, 1e-30);
}

INSTANTIATE_TEST_SUITE_P(Dims, SicDims, ::testing::Values(2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16));

TEST(Sic, MissingFiducial) { EXPECT_THROW(sic_fiducial(13), std::runtime_error); }

TEST(Hoggar, SixtyFourEquiangularLines) {
  const VectorSet v = hoggar_lines();
  EXPECT_EQ(v.d, 8);
  EXPECT_EQ(v.size(), 64);
  EXPECT_LE(verify_symmetry(v, symmetry_etf(8, 64)), 1e-13);
  EXPECT_LE(verify_povm(v), 1e-12);
}

TEST(Etf, FourierUnitary) {
  for (int k = 2; k <= 6; ++k) {
    const HermitianUnitary u = etf_fourier_unitary(k);
    EXPECT_EQ(u.n, k * k);
    EXPECT_EQ(u.d, k * (k - 1) / 2);
    EXPECT_LE(unitarity_residual(u.entries), 1e-13);
    EXPECT_LE((u.entries - u.entries.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    const GramMatrix g = gram_from_unitary(u);
    const VectorSet v = vectors_from_gram(g);
    EXPECT_LE(verify_symmetry(v, symmetry_etf(u.d, u.n)), 1e-12);
  }
}

TEST(Ks, OrthogonalityCounts) {
  const std::vector<std::tuple<std::string, int, int, int>> sets = {
      {"yu-oh-13", 3, 13, 24}, {"cabello-18", 4, 18, 63}, {"lisonek-21", 6, 21, 105}};
  for (const auto& [name, d, n, z] : sets) {
    const VectorSet v = ks_set(name);
    EXPECT_EQ(v.d, d);
    EXPECT_EQ(v.size(), n);
    EXPECT_EQ(count_orthogonal_pairs(v, 1e-12), z) << name;
    const GramMatrix g = gram_from_vectors(v);
    EXPECT_LE(povm_residual(g), 1e-12) << name;
  }
  EXPECT_THROW(ks_set("peres-33"), std::invalid_argument);
}

TEST(Registry, NamedStructures) {
  EXPECT_EQ(make_structure({"mub", "4"}).unitary.n, 20);
  EXPECT_EQ(make_structure({"mub", "4", "3"}).unitary.n, 12);
  EXPECT_EQ(make_structure({"mub", "6", "2"}).unitary.n, 12);
  EXPECT_EQ(make_structure({"sic", "3"}).unitary.n, 9);
  EXPECT_EQ(make_structure({"hoggar"}).unitary.n, 64);
  EXPECT_EQ(make_structure({"etf-fourier", "3"}).unitary.n, 9);
  EXPECT_TRUE(make_structure({"mub", "16"}).long_running);
  EXPECT_THROW(make_structure({"mub", "4", "9"}), std::invalid_argument);
  EXPECT_THROW(make_structure({"cube"}), std::invalid_argument);
  EXPECT_FALSE(structure_registry().empty());
}

TEST(Weyl, CommutationRelation) {
  const WeylOperators w = weyl_operators(5);
  const cplx omega = std::polar(1.0, 2.0 * M_PI / 5.0);
  EXPECT_LE((w.z * w.x - omega * w.x * w.z).cwiseAbs().maxCoeff(), 1e-14);
}

}  // namespace
}  // namespace isoframe
