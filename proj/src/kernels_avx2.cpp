// Copyright 2026 The isoframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Compiled with -mavx2 -mfma; only reached through the dispatcher.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "isoframe/kernels.hpp"

namespace isoframe::kernels::avx2 {

void cmul_conj(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double* po = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    const __m256d b_re = _mm256_movedup_pd(vb);
    const __m256d b_im = _mm256_permute_pd(vb, 0xF);
    const __m256d a_sw = _mm256_permute_pd(va, 0x5);
    const __m256d t = _mm256_mul_pd(a_sw, b_im);
    // even lanes: ar*br + ai*bi, odd lanes: ai*br - ar*bi
    _mm256_storeu_pd(po + 2 * i, _mm256_fmsubadd_pd(va, b_re, t));
  }
  for (; i < n; ++i) out[i] = a[i] * std::conj(b[i]);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d vmax = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    vmax = _mm256_max_pd(vmax, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vmax);
  double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) m = std::max(m, std::norm(a[i] - b[i]));
  return std::sqrt(m);
}

}  // namespace isoframe::kernels::avx2
