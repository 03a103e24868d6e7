// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pegasos {

/// Settings shared by the linear and kernel solvers.
struct TrainOptions {
  double lambda = 1.0;
  double bias = 0.0;  // fixed offset b, never learned
  std::size_t iterations = 1000;
  std::size_t check_every = 1000;  // stop parameter X
  bool projection = false;         // linear solver only
  bool halting = true;  // false: record every check, never stop early
  bool record_steps = false;
  std::uint64_t seed = 1;
};

/// Throws InputError unless lambda > 0, iterations >= 1, check_every >= 1.
void validate(const TrainOptions& options);

struct AucCheck {
  std::size_t iteration;
  double auc;
};

struct StepRecord {
  std::size_t row;
  bool violated;
};

struct TrainingTrace {
  double baseline_auc = 0.5;
  std::vector<AucCheck> checks;  // iterations are multiples of check_every
  bool halted_early = false;
  // 1-based positions in `checks` where the AUC beat every earlier value
  // (including the baseline).
  std::vector<std::size_t> improvement_checks;
  std::vector<StepRecord> steps;  // only with record_steps
};

namespace detail {

/// Applies one check of the halt rule. Returns true when training must stop.
bool record_check(TrainingTrace& trace, double& best, std::size_t iteration, double auc,
                  bool halting);

}  // namespace detail

}  // namespace pegasos
