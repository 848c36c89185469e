// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "isoframe/constructions.hpp"
#include "isoframe/core.hpp"

namespace isoframe {
namespace {

VectorSet two_mub_d2() { return vectors_from_bases(mub_prime(2)); }

TEST(Gram, HermitianWithUnitDiagonal) {
  const GramMatrix g = gram_from_vectors(sic_weyl_heisenberg(sic_fiducial(3)));
  EXPECT_EQ(g.size(), 9);
  EXPECT_EQ((g.entries - g.entries.adjoint()).cwiseAbs().maxCoeff(), 0.0);
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(g.entries(i, i).real(), 1.0, 1e-14);
}

TEST(Gram, WorkedExampleEntries) {
  auto bases = mub_prime(2);
  bases.resize(2);
  const GramMatrix g = gram_from_vectors(vectors_from_bases(bases));
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(g.entries(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g.entries(0, 2)), h, 1e-15);
  EXPECT_NEAR(std::abs(g.entries(1, 3)), h, 1e-15);
  EXPECT_LE(povm_residual(g), 1e-14);
}

TEST(Unitary, FromGramIsHermitianUnitary) {
  for (int d : {2, 3, 4, 5}) {
    const GramMatrix g = gram_from_vectors(sic_weyl_heisenberg(sic_fiducial(d)));
    const HermitianUnitary u = unitary_from_gram(g);
    EXPECT_LE(unitarity_residual(u.entries), 1e-10) << d;
    EXPECT_LE((u.entries - u.entries.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(u.entries(0, 0).real(), 1.0 - 2.0 / d, 1e-12);
  }
}

TEST(Unitary, RejectsNonPovmGram) {
  GramMatrix g = gram_from_vectors(sic_weyl_heisenberg(sic_fiducial(3)));
  g.entries(0, 1) *= 1.5;
  g.entries(1, 0) = std::conj(g.entries(0, 1));
  EXPECT_THROW(unitary_from_gram(g), ValidationError);
  EXPECT_NO_THROW(unitary_from_gram(g, Tolerances{}, false));
}

TEST(RoundTrip, VectorsGramUnitaryVectors) {
  for (const auto& v : {sic_weyl_heisenberg(sic_fiducial(4)), vectors_from_bases(mub_bases(4)),
                        two_mub_d2(), ks_set("cabello-18")}) {
    const GramMatrix g = gram_from_vectors(v);
    const HermitianUnitary u = unitary_from_gram(g);
    const GramMatrix g2 = gram_from_unitary(u);
    EXPECT_LE((g2.entries - g.entries).cwiseAbs().maxCoeff(), 1e-10);
    const VectorSet w = vectors_from_gram(g2);
    EXPECT_EQ(w.d, v.d);
    EXPECT_LE((gram_from_vectors(w).entries - g.entries).cwiseAbs().maxCoeff(), 1e-10);
    for (int i = 0; i < w.d; ++i) {
      for (int j = 0; j < w.size(); ++j) {
        if (std::abs(w.vectors(i, j)) > 1e-10) {
          EXPECT_EQ(w.vectors(i, j).imag(), 0.0);
          EXPECT_GT(w.vectors(i, j).real(), 0.0);
          break;
        }
      }
    }
  }
}

TEST(Validate, NormAndCount) {
  VectorSet v = two_mub_d2();
  EXPECT_NO_THROW(validate_vectors(v, 1e-12));
  v.vectors.col(1) *= 1.01;
  EXPECT_THROW(validate_vectors(v, 1e-12), ValidationError);
  VectorSet small;
  small.d = 3;
  small.vectors = MatC::Identity(3, 2);
  EXPECT_THROW(validate_vectors(small, 1e-12), ValidationError);
}

TEST(Symmetry, EtfOverlapIsReciprocalForm) {
  // (N - d) / (d (N - 1)) for ETF(3, 9)
  const SymmetryMatrix s = symmetry_etf(3, 9);
  EXPECT_DOUBLE_EQ(s.entries(0, 1), 0.25);
  EXPECT_DOUBLE_EQ(s.entries(2, 2), 1.0);
  for (int d = 2; d <= 16; ++d) EXPECT_NEAR(symmetry_etf(d, d * d).entries(0, 1), 1.0 / (d + 1), 1e-15);
  EXPECT_THROW(symmetry_etf(4, 4), std::invalid_argument);
}

TEST(Symmetry, MubBlocks) {
  const SymmetryMatrix s = symmetry_mub(2, 2);
  EXPECT_DOUBLE_EQ(s.entries(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(s.entries(0, 2), 0.5);
  EXPECT_THROW(symmetry_mub(3, 1), std::invalid_argument);
  const VectorSet v = vectors_from_bases(mub_bases(5));
  EXPECT_LE(verify_symmetry(v, symmetry_mub(5, 6)), 1e-13);
  EXPECT_LE(verify_povm(v), 1e-13);
}

TEST(Symmetry, DetectsFlippedSign) {
  VectorSet v = sic_weyl_heisenberg(sic_fiducial(4));
  EXPECT_LE(verify_symmetry(v, symmetry_etf(4, 16)), 1e-12);
  v.vectors(2, 5) = -v.vectors(2, 5);
  EXPECT_GT(verify_symmetry(v, symmetry_etf(4, 16)), 1e-3);
}

TEST(Support, PatternOfMubUnitary) {
  const HermitianUnitary u = unitary_from_gram(gram_from_vectors(vectors_from_bases(mub_bases(3))));
  // 12 vectors, 4 bases of 3: zeros only inside each basis
  EXPECT_EQ(static_cast<int>(u.support.size()), 66 - 4 * 3);
}

}  // namespace
}  // namespace isoframe
