// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pegasos/dataset.hpp"
#include "pegasos/kernel.hpp"
#include "pegasos/linear.hpp"
#include "pegasos/stop.hpp"
#include "pegasos/training.hpp"

namespace pegasos {

/// n evenly spaced values from lo to hi inclusive (n = 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct GridSpec {
  std::vector<double> lambdas;
  std::vector<double> biases;

  /// lambda in {1e-4, ..., 1e3} by decades; bias linspace(-2, 2, 10).
  static GridSpec defaults();
};

struct Fold {
  std::vector<std::size_t> train;       // ascending
  std::vector<std::size_t> validation;  // ascending
};

/// Each class is shuffled and dealt round-robin over the k folds, the second
/// class continuing where the first stopped so fold sizes differ by at most
/// one. Throws InputError for k < 2 and NumericError if a class has fewer
/// than k rows (a validation fold would miss that class).
std::vector<Fold> stratified_kfold(const Dataset& data, std::size_t k, std::uint64_t seed);

/// A trained linear or kernel model behind one scoring interface.
struct FittedModel {
  std::variant<LinearModel, KernelModel> model;
  TrainingTrace trace;

  std::vector<double> scores(const Dataset& data) const;
};

FittedModel fit(const Dataset& data, const TrainOptions& options,
                const std::optional<KernelSpec>& kernel = std::nullopt);

struct FoldScore {
  std::size_t fold;
  double train_auc;
  double validation_auc;
};

/// Trains on each fold's training rows with seed derive_seed(options.seed, {fold}).
std::vector<FoldScore> cross_validate(const Dataset& data, std::span<const Fold> folds,
                                      const TrainOptions& options,
                                      const std::optional<KernelSpec>& kernel = std::nullopt,
                                      std::size_t jobs = 1);

/// Folds from stratified_kfold(data, k, options.seed).
std::vector<FoldScore> cross_validate(const Dataset& data, std::size_t k,
                                      const TrainOptions& options,
                                      const std::optional<KernelSpec>& kernel = std::nullopt,
                                      std::size_t jobs = 1);

struct GridRow {
  std::size_t lambda_index;
  std::size_t bias_index;
  double lambda;
  double bias;
  StopStatistics stop;
  std::vector<double> fold_aucs;
  double mean_auc;
};

struct CVResult {
  std::vector<GridRow> rows;  // lambda-major grid order
  std::size_t best = 0;       // first row with the highest mean AUC

  const GridRow& best_row() const { return rows.at(best); }
};

struct GridOptions {
  std::size_t folds = 5;
  std::size_t iterations = 1000;
  std::uint64_t seed = 1;
  CenterMode stop_mode = CenterMode::kVerbatim;
  std::size_t jobs = 1;
};

/// For every (lambda, bias): pick the stop interval on the whole dataset, then
/// k-fold CV with it. Folds are shared by all grid points; training seeds are
/// derived from (seed, lambda index, bias index, fold). A grid point whose
/// probe run never improves on chance gets X = 1 and an empty estimate.
CVResult grid_search(const Dataset& data, const GridSpec& grid, const GridOptions& options);

struct CurveRow {
  double value;  // training proportion or hyperparameter value
  std::size_t fold;
  double train_auc;
  double validation_auc;
};

/// Default proportions 0.2, 0.4, 0.6, 0.8, 1.0.
std::vector<double> default_proportions();

/// k-fold CV on a stratified subsample of round(p n_c) rows per class, for each
/// proportion p. At p = 1 the full dataset is used unchanged, so those rows
/// equal cross_validate(data, k, options). Throws NumericError when a
/// subsample has fewer than k rows of a class.
std::vector<CurveRow> learning_curve(const Dataset& data, const TrainOptions& options,
                                     std::span<const double> proportions, std::size_t k,
                                     std::size_t jobs = 1);

enum class Hyperparameter { kLambda, kBias };

/// One k-fold CV per value of the varied hyperparameter, all with the same
/// folds and seeds.
std::vector<CurveRow> validation_curve(const Dataset& data, Hyperparameter varied,
                                       std::span<const double> values, const TrainOptions& options,
                                       std::size_t k, std::size_t jobs = 1);

/// Trains on `train` and returns the ROC-AUC of its scores on `test`.
double evaluate_holdout(const Dataset& train, const Dataset& test, const TrainOptions& options,
                        const std::optional<KernelSpec>& kernel = std::nullopt);

}  // namespace pegasos
