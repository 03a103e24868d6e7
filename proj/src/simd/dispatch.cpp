// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string>

#include "pegasos/simd.hpp"

namespace pegasos::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

const KernelTable* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &detail::scalar_table();
    case Isa::kAvx2:
#if defined(PEGASOS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &detail::avx2_table();
#endif
      return nullptr;
    case Isa::kNeon:
#if defined(PEGASOS_HAVE_NEON)
      return &detail::neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (kernels_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

namespace {

const KernelTable& select_table() {
  const char* forced = std::getenv("PEGASOS_SIMD");
  if (forced != nullptr && std::string(forced) == "scalar") return detail::scalar_table();
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (const KernelTable* table = kernels_for(isa)) return *table;
  }
  return detail::scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select_table();
  return table;
}

}  // namespace pegasos::simd
