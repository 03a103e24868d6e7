// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/training.hpp"

#include <cmath>

#include "pegasos/error.hpp"

namespace pegasos {

void validate(const TrainOptions& options) {
  if (!(options.lambda > 0.0) || !std::isfinite(options.lambda)) {
    throw InputError("lambda must be a positive finite number");
  }
  if (!std::isfinite(options.bias)) throw InputError("bias must be finite");
  if (options.iterations < 1) throw InputError("iterations must be at least 1");
  if (options.check_every < 1) throw InputError("check interval must be at least 1");
}

namespace detail {

bool record_check(TrainingTrace& trace, double& best, std::size_t iteration, double auc,
                  bool halting) {
  trace.checks.push_back({iteration, auc});
  if (auc > best) {
    best = auc;
    trace.improvement_checks.push_back(trace.checks.size());
    return false;
  }
  if (halting) {
    trace.halted_early = true;
    return true;
  }
  return false;
}

}  // namespace detail

}  // namespace pegasos
