// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "pegasos/dataset.hpp"

namespace pegasos {

/// Prediction scores paired with true labels.
struct ScoredLabels {
  std::span<const double> scores;
  std::span<const Label> labels;
};

struct RocPoint {
  double fpr;
  double tpr;
};

/// ROC curve from a threshold sweep that starts above the largest score and
/// steps down through each distinct score. Tied scores share one point, so a
/// tie block contributes a diagonal segment. Starts at (0,0), ends at (1,1).
/// Throws NumericError for single-class input, InputError on length mismatch.
std::vector<RocPoint> roc_curve(ScoredLabels data);

/// Trapezoidal area under a curve with non-decreasing fpr.
double auc_trapezoid(std::span<const RocPoint> curve);

/// Fraction of (positive, negative) pairs ranked correctly, ties counted as
/// one half. Computed from tie-averaged ranks in O(n log n).
double auc_pairwise(ScoredLabels data);

/// auc_pairwise on dataset labels; scores must be in dataset row order.
double roc_auc(std::span<const double> scores, const Dataset& data);

}  // namespace pegasos
