// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

#include "pegasos/dataset.hpp"
#include "pegasos/rng.hpp"

namespace pegasos {

struct Sample {
  std::size_t index;
  LabeledPoint point;
};

/// Draws one training row per call: a fair coin picks the class, then a
/// uniform row within it. Every positive row therefore has probability
/// 1/(2 n+) and every negative row 1/(2 n-).
///
/// Draw discipline: the class coin consumes one raw draw, the row choice a
/// second. Holds a reference to the dataset; the dataset must outlive it.
class BalancedSampler {
 public:
  /// Throws NumericError if either class is empty.
  BalancedSampler(const Dataset& data, std::uint64_t seed);

  Sample next();

 private:
  const Dataset* data_;
  Rng rng_;
};

}  // namespace pegasos
