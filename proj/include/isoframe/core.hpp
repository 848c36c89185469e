// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "isoframe/linalg.hpp"
#include "isoframe/types.hpp"

namespace isoframe {

// Checks unit norms and N >= d; throws ValidationError.
void validate_vectors(const VectorSet& v, double eps_norm);

// G_ij = <phi_i|phi_j>, conjugate-linear in the first slot.
GramMatrix gram_from_vectors(const VectorSet& v);

// ||G^2 - (N/d) G||_max
double povm_residual(const GramMatrix& g);

// Support pairs (i < j) with |U_ij| > eps_zero.
std::vector<Pair> support_pattern(const MatC& u, double eps_zero);

// U = I - (2d/N) G. With check = true the POVM property, unitarity and the
// constant diagonal are enforced.
HermitianUnitary unitary_from_gram(const GramMatrix& g, const Tolerances& tol = {},
                                   bool check = true);

GramMatrix gram_from_unitary(const HermitianUnitary& u, const Tolerances& tol = {});

// Rank-d factorization of a POVM-valid Gram matrix. In each coordinate row the
// first entry of modulus above eps_zero is real and positive.
VectorSet vectors_from_gram(const GramMatrix& g, const Tolerances& tol = {});

// ||sum_j |phi_j><phi_j| - (N/d) I||_max
double verify_povm(const VectorSet& v);

// max_ij | |<phi_i|phi_j>|^2 - S_ij |
double verify_symmetry(const VectorSet& v, const SymmetryMatrix& s);

double unitarity_residual(const MatC& u);

}  // namespace isoframe
