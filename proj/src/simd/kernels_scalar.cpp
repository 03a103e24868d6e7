// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/simd.hpp"

namespace pegasos::simd::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double squared_distance_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void scale_add_scalar(double* w, double scale, double coef, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) w[i] = scale * w[i] + coef * x[i];
}

void scale_scalar(double* w, double scale, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) w[i] *= scale;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::kScalar, dot_scalar, squared_distance_scalar,
                                 scale_add_scalar, scale_scalar};
  return table;
}

}  // namespace pegasos::simd::detail
