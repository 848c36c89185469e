// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoframe/galois.hpp"
#include "isoframe/types.hpp"

namespace isoframe {

struct WeylOperators {
  MatC x;  // X|j> = |j+1 mod d>
  MatC z;  // Z|j> = w^j |j>
};
WeylOperators weyl_operators(int d);

// (F_k)_st = w^{st}, w = exp(2 pi i / k); not normalized.
MatC fourier_matrix(int k);

// Hermitian unitary of the ETF(k(k-1)/2, k^2) built from the symplectic
// character table of Z_k x Z_k (equivalent to F_k (x) F_k).
HermitianUnitary etf_fourier_unitary(int k);

// Each basis is a d x d unitary whose columns are the basis vectors; the
// standard basis comes first.
std::vector<MatC> mub_prime(int p);
std::vector<MatC> mub_prime_power(int p, int n);
std::vector<MatC> mub_prime_power(int p, const galois::Poly& modulus);
// All d+1 bases for any supported d (prime or p^n).
std::vector<MatC> mub_bases(int d);

// Irreducible polynomials used by mub_prime_power, lowest degree first.
galois::Poly default_mub_polynomial(int p, int n);
galois::Poly alternate_mub_polynomial(int p, int n);

VectorSet vectors_from_bases(const std::vector<MatC>& bases);

// d^2 vectors X^s Z^t |fiducial>, s slowest.
VectorSet sic_weyl_heisenberg(const VecC& fiducial);

// Built-in fiducials: d = 2 (tetrahedron), d = 3 ((1,-1,0)/sqrt 2); other d are
// read from the fiducial data directory.
VecC sic_fiducial(int d, double* declared_accuracy = nullptr);
std::string fiducial_path(int d);

VecC hoggar_fiducial();
VectorSet hoggar_lines();

VectorSet ks_set(const std::string& name);
// Orthogonal pairs (i < j) with |<phi_i|phi_j>| <= eps.
int count_orthogonal_pairs(const VectorSet& v, double eps);

SymmetryMatrix symmetry_etf(int d, int n);
SymmetryMatrix symmetry_mub(int d, int m);

struct NamedStructure {
  std::string name;
  std::optional<VectorSet> vectors;
  HermitianUnitary unitary;
  std::optional<SymmetryMatrix> symmetry;
  double declared_accuracy = 0.0;
  bool long_running = false;
};

// Specs: "mub D [M]", "sic D", "hoggar", "etf-fourier K",
// "ks yu-oh-13|cabello-18|lisonek-21", "hadamard-pair D".
NamedStructure make_structure(const std::vector<std::string>& spec);
std::vector<std::string> structure_registry();

}  // namespace isoframe
