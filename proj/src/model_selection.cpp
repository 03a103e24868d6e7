// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pegasos/error.hpp"
#include "pegasos/parallel.hpp"
#include "pegasos/rng.hpp"
#include "pegasos/roc.hpp"

namespace pegasos {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw InputError("linspace needs at least one point");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

GridSpec GridSpec::defaults() {
  return {{0.0001, 0.001, 0.01, 0.1, 1.0, 10.0, 100.0, 1000.0}, linspace(-2.0, 2.0, 10)};
}

std::vector<Fold> stratified_kfold(const Dataset& data, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InputError("cross-validation needs at least 2 folds");
  if (data.n_plus() < k || data.n_minus() < k) {
    throw NumericError("cannot build " + std::to_string(k) + " stratified folds from " +
                       std::to_string(data.n_plus()) + " positive and " +
                       std::to_string(data.n_minus()) + " negative rows");
  }
  Rng rng(seed);
  std::vector<std::size_t> fold_of(data.size());
  std::size_t dealer = 0;
  for (Label y : {Label::kPositive, Label::kNegative}) {
    const auto rows = data.indices_of(y);
    std::vector<std::size_t> shuffled(rows.begin(), rows.end());
    rng.shuffle(std::span(shuffled));
    for (std::size_t i : shuffled) fold_of[i] = dealer++ % k;
  }
  std::vector<Fold> folds(k);
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t f = 0; f < k; ++f) {
      (f == fold_of[i] ? folds[f].validation : folds[f].train).push_back(i);
    }
  }
  return folds;
}

std::vector<double> FittedModel::scores(const Dataset& data) const {
  if (const auto* linear = std::get_if<LinearModel>(&model)) return decision_scores(*linear, data);
  return kernel_scores(std::get<KernelModel>(model), data);
}

FittedModel fit(const Dataset& data, const TrainOptions& options,
                const std::optional<KernelSpec>& kernel) {
  if (kernel) {
    KernelResult r = train_kernel(data, *kernel, options);
    return {std::move(r.model), std::move(r.trace)};
  }
  LinearResult r = train_linear(data, options);
  return {std::move(r.model), std::move(r.trace)};
}

std::vector<FoldScore> cross_validate(const Dataset& data, std::span<const Fold> folds,
                                      const TrainOptions& options,
                                      const std::optional<KernelSpec>& kernel, std::size_t jobs) {
  std::vector<FoldScore> out(folds.size());
  parallel_for(folds.size(), jobs, [&](std::size_t f) {
    const Dataset train = data.subset(folds[f].train);
    const Dataset validation = data.subset(folds[f].validation);
    TrainOptions fold_options = options;
    fold_options.seed = derive_seed(options.seed, {f});
    const FittedModel fitted = fit(train, fold_options, kernel);
    out[f] = {f, roc_auc(fitted.scores(train), train),
              roc_auc(fitted.scores(validation), validation)};
  });
  return out;
}

std::vector<FoldScore> cross_validate(const Dataset& data, std::size_t k,
                                      const TrainOptions& options,
                                      const std::optional<KernelSpec>& kernel, std::size_t jobs) {
  const auto folds = stratified_kfold(data, k, options.seed);
  return cross_validate(data, folds, options, kernel, jobs);
}

namespace {

// Path element separating the stop-selection seed from the fold seeds.
constexpr std::uint64_t kStopSeedSalt = 0x5709;

}  // namespace

CVResult grid_search(const Dataset& data, const GridSpec& grid, const GridOptions& options) {
  if (grid.lambdas.empty() || grid.biases.empty()) throw InputError("empty hyperparameter grid");
  for (double l : grid.lambdas) {
    if (!(l > 0.0)) throw InputError("grid lambdas must be positive");
  }
  const auto folds = stratified_kfold(data, options.folds, options.seed);

  CVResult result;
  result.rows.resize(grid.lambdas.size() * grid.biases.size());
  parallel_for(result.rows.size(), options.jobs, [&](std::size_t cell) {
    const std::size_t li = cell / grid.biases.size();
    const std::size_t bi = cell % grid.biases.size();
    GridRow& row = result.rows[cell];
    row.lambda_index = li;
    row.bias_index = bi;
    row.lambda = grid.lambdas[li];
    row.bias = grid.biases[bi];

    TrainOptions train;
    train.lambda = row.lambda;
    train.bias = row.bias;
    train.iterations = options.iterations;
    train.seed = derive_seed(options.seed, {li, bi, kStopSeedSalt});
    try {
      row.stop = select_stop_parameter(data, train, options.stop_mode);
    } catch (const NumericError&) {
      // The probe never beat chance: no waiting times, so fall back to X = 1.
      row.stop = StopStatistics{};
      row.stop.mode = options.stop_mode;
      row.stop.candidates = {1};
      row.stop.x_selected = 1;
    }

    train.check_every = row.stop.x_selected;
    train.seed = derive_seed(options.seed, {li, bi});
    double sum = 0.0;
    for (const FoldScore& s : cross_validate(data, folds, train)) {
      row.fold_aucs.push_back(s.validation_auc);
      sum += s.validation_auc;
    }
    row.mean_auc = sum / static_cast<double>(row.fold_aucs.size());
  });

  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    if (result.rows[i].mean_auc > result.rows[result.best].mean_auc) result.best = i;
  }
  return result;
}

std::vector<double> default_proportions() { return {0.2, 0.4, 0.6, 0.8, 1.0}; }

namespace {

Dataset stratified_subsample(const Dataset& data, double proportion, std::size_t k,
                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> keep;
  for (Label y : {Label::kPositive, Label::kNegative}) {
    const auto rows = data.indices_of(y);
    const auto take =
        static_cast<std::size_t>(std::llround(proportion * static_cast<double>(rows.size())));
    if (take < k) {
      throw NumericError("proportion " + std::to_string(proportion) + " keeps " +
                         std::to_string(take) + " " +
                         (y == Label::kPositive ? "positive" : "negative") +
                         " rows, fewer than the " + std::to_string(k) + " folds");
    }
    std::vector<std::size_t> shuffled(rows.begin(), rows.end());
    rng.shuffle(std::span(shuffled));
    keep.insert(keep.end(), shuffled.begin(), shuffled.begin() + take);
  }
  std::sort(keep.begin(), keep.end());
  return data.subset(keep);
}

}  // namespace

std::vector<CurveRow> learning_curve(const Dataset& data, const TrainOptions& options,
                                     std::span<const double> proportions, std::size_t k,
                                     std::size_t jobs) {
  std::vector<CurveRow> rows;
  for (std::size_t pi = 0; pi < proportions.size(); ++pi) {
    const double p = proportions[pi];
    if (!(p > 0.0 && p <= 1.0)) throw InputError("proportions must lie in (0, 1]");
    const Dataset sample =
        p == 1.0 ? data : stratified_subsample(data, p, k, derive_seed(options.seed, {pi}));
    for (const FoldScore& s : cross_validate(sample, k, options, std::nullopt, jobs)) {
      rows.push_back({p, s.fold, s.train_auc, s.validation_auc});
    }
  }
  return rows;
}

std::vector<CurveRow> validation_curve(const Dataset& data, Hyperparameter varied,
                                       std::span<const double> values, const TrainOptions& options,
                                       std::size_t k, std::size_t jobs) {
  const auto folds = stratified_kfold(data, k, options.seed);
  std::vector<CurveRow> rows;
  for (double v : values) {
    TrainOptions point = options;
    (varied == Hyperparameter::kLambda ? point.lambda : point.bias) = v;
    for (const FoldScore& s : cross_validate(data, folds, point, std::nullopt, jobs)) {
      rows.push_back({v, s.fold, s.train_auc, s.validation_auc});
    }
  }
  return rows;
}

double evaluate_holdout(const Dataset& train, const Dataset& test, const TrainOptions& options,
                        const std::optional<KernelSpec>& kernel) {
  if (train.dim() != test.dim()) {
    throw InputError("train and test dimensions differ (" + std::to_string(train.dim()) + " vs " +
                     std::to_string(test.dim()) + ")");
  }
  if (!test.has_both_classes()) throw NumericError("test partition holds a single class");
  const FittedModel fitted = fit(train, options, kernel);
  return roc_auc(fitted.scores(test), test);
}

}  // namespace pegasos
