// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dense double-precision kernels used by the solvers' inner loops.
//
// Every kernel has a scalar reference implementation. AVX2 (x86-64) and NEON
// (aarch64) variants are compiled when the toolchain supports them and picked
// at runtime from the CPU's reported features. Setting PEGASOS_SIMD=scalar in
// the environment forces the reference path.
//
// Vector variants reassociate sums, so results agree with the scalar path to
// rounding, not bit-for-bit. A given process always uses one table, which
// keeps every run on one machine reproducible.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace pegasos::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
  // w[i] = scale * w[i] + coef * x[i]
  void (*scale_add)(double* w, double scale, double coef, const double* x, std::size_t n);
  // w[i] = scale * w[i]
  void (*scale)(double* w, double scale, std::size_t n);
};

/// Table for a specific instruction set. Returns nullptr when that variant
/// was not compiled in or the CPU cannot run it.
const KernelTable* kernels_for(Isa isa);

/// All variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// The table selected for this process.
const KernelTable& active();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline double squared_norm(std::span<const double> a) {
  return active().dot(a.data(), a.data(), a.size());
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  return active().squared_distance(a.data(), b.data(), a.size());
}

inline void scale_add(std::span<double> w, double scale, double coef, std::span<const double> x) {
  active().scale_add(w.data(), scale, coef, x.data(), w.size());
}

inline void scale(std::span<double> w, double s) { active().scale(w.data(), s, w.size()); }

namespace detail {
const KernelTable& scalar_table();
#if defined(PEGASOS_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(PEGASOS_HAVE_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

}  // namespace pegasos::simd
