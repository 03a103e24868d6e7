// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

// NEON is mandatory on aarch64, so this variant needs no runtime check.

#include <arm_neon.h>

#include "pegasos/simd.hpp"

namespace pegasos::simd::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double squared_distance_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    const float64x2_t d1 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    acc0 = vfmaq_f64(acc0, d0, d0);
    acc1 = vfmaq_f64(acc1, d1, d1);
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void scale_add_neon(double* w, double scale, double coef, const double* x, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(scale);
  const float64x2_t vc = vdupq_n_f64(coef);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t scaled = vmulq_f64(vs, vld1q_f64(w + i));
    vst1q_f64(w + i, vfmaq_f64(scaled, vc, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) w[i] = scale * w[i] + coef * x[i];
}

void scale_neon(double* w, double scale, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(scale);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(w + i, vmulq_f64(vs, vld1q_f64(w + i)));
  for (; i < n; ++i) w[i] *= scale;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Isa::kNeon, dot_neon, squared_distance_neon, scale_add_neon,
                                 scale_neon};
  return table;
}

}  // namespace pegasos::simd::detail
