// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "isoframe/types.hpp"

namespace isoframe::kernels {

enum class Isa { Scalar, Avx2 };

// Selected from cpuid at first use; ISOFRAME_SIMD=scalar forces the reference path.
Isa active_isa();
// Overrides the selection made from the environment; throws if unsupported.
void set_active_isa(Isa isa);
const char* isa_name(Isa isa);
bool isa_available(Isa isa);

// out[i] = a[i] * conj(b[i])
void cmul_conj(const cplx* a, const cplx* b, cplx* out, std::size_t n);
// max_i |a[i] - b[i]|
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);

namespace scalar {
void cmul_conj(const cplx* a, const cplx* b, cplx* out, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
void cmul_conj(const cplx* a, const cplx* b, cplx* out, std::size_t n);
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);
}  // namespace avx2

}  // namespace isoframe::kernels
