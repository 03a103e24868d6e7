// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/sampler.hpp"

#include "pegasos/error.hpp"

namespace pegasos {

BalancedSampler::BalancedSampler(const Dataset& data, std::uint64_t seed)
    : data_(&data), rng_(seed) {
  if (!data.has_both_classes()) {
    throw NumericError("balanced sampling needs at least one row of each class");
  }
}

Sample BalancedSampler::next() {
  const Label y = rng_.coin() ? Label::kPositive : Label::kNegative;
  const auto rows = data_->indices_of(y);
  const std::size_t index = rows[rng_.below(rows.size())];
  return {index, data_->point(index)};
}

}  // namespace pegasos
