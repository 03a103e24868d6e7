// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/roc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pegasos/error.hpp"

namespace pegasos {
namespace {

struct ClassCounts {
  double positive = 0;
  double negative = 0;
};

ClassCounts validate(ScoredLabels data) {
  if (data.scores.size() != data.labels.size()) {
    throw InputError("roc: " + std::to_string(data.scores.size()) + " scores but " +
                     std::to_string(data.labels.size()) + " labels");
  }
  for (double s : data.scores) {
    if (!std::isfinite(s)) throw NumericError("roc: scores must be finite");
  }
  ClassCounts counts;
  for (Label y : data.labels) (y == Label::kPositive ? counts.positive : counts.negative) += 1;
  if (counts.positive == 0 || counts.negative == 0) {
    throw NumericError("ROC-AUC is undefined without both classes present");
  }
  return counts;
}

// Row order by descending score.
std::vector<std::size_t> order_by_score_desc(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace

std::vector<RocPoint> roc_curve(ScoredLabels data) {
  const ClassCounts counts = validate(data);
  const auto order = order_by_score_desc(data.scores);

  std::vector<RocPoint> curve{{0.0, 0.0}};
  double tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double threshold = data.scores[order[i]];
    for (; i < order.size() && data.scores[order[i]] == threshold; ++i) {
      (data.labels[order[i]] == Label::kPositive ? tp : fp) += 1;
    }
    curve.push_back({fp / counts.negative, tp / counts.positive});
  }
  return curve;
}

double auc_trapezoid(std::span<const RocPoint> curve) {
  double area = 0.0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const double width = curve[i].fpr - curve[i - 1].fpr;
    if (width < 0) throw InputError("roc: curve fpr must be non-decreasing");
    area += width * (curve[i].tpr + curve[i - 1].tpr) / 2.0;
  }
  return area;
}

double auc_pairwise(ScoredLabels data) {
  const ClassCounts counts = validate(data);
  std::vector<std::size_t> order(data.scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return data.scores[a] < data.scores[b]; });

  // Mann-Whitney U from 1-based ranks, ties sharing their average rank. Twice
  // the rank sum stays integral, so the accumulation is exact.
  double twice_rank_sum = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::size_t positives = 0;
    for (; j < order.size() && data.scores[order[j]] == data.scores[order[i]]; ++j) {
      if (data.labels[order[j]] == Label::kPositive) ++positives;
    }
    twice_rank_sum += static_cast<double>(positives) * static_cast<double>(i + 1 + j);
    i = j;
  }
  const double u = twice_rank_sum / 2.0 - counts.positive * (counts.positive + 1) / 2.0;
  return u / (counts.positive * counts.negative);
}

double roc_auc(std::span<const double> scores, const Dataset& data) {
  return auc_pairwise({scores, data.labels()});
}

}  // namespace pegasos
