// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace isoframe::galois {

// Polynomials are coefficient lists, lowest degree first.
using Poly = std::vector<int>;

// a * b mod (modulus, q); modulus is monic of degree n, result has length n.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int q);

// Trace of multiplication-by-y as a map on Z_q[x]/(modulus).
int trace(const Poly& y, const Poly& modulus, int q);

// Monic lift to Z_4 of a monic binary polynomial whose roots are squared
// (Graeffe step): h(x^2) = +-(e(x)^2 - o(x)^2) mod 4.
Poly hensel_lift(const Poly& f);

// Teichmuller set {0, 1, xi, xi^2, ...} of GR(4, n) with xi a root of the lift.
std::vector<Poly> teichmuller_set(const Poly& lift);

// All p^n coefficient vectors of GF(p^n), lexicographic with the constant term slowest.
std::vector<Poly> field_elements(int p, int n);

bool is_prime(int p);

}  // namespace isoframe::galois
