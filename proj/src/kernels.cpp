// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0

#include "isoframe/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace isoframe::kernels {

namespace scalar {

void cmul_conj(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * std::conj(b[i]);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::norm(a[i] - b[i]));
  return std::sqrt(m);
}

}  // namespace scalar

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Isa isa_from_env() {
  const char* env = std::getenv("ISOFRAME_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{isa_from_env()};
  return isa;
}

}  // namespace

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("instruction set not available");
  selected().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void cmul_conj(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  if (active_isa() == Isa::Avx2) {
    avx2::cmul_conj(a, b, out, n);
  } else {
    scalar::cmul_conj(a, b, out, n);
  }
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  return active_isa() == Isa::Avx2 ? avx2::max_abs_diff(a, b, n) : scalar::max_abs_diff(a, b, n);
}

}  // namespace isoframe::kernels
