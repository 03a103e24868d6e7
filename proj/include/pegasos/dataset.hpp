// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pegasos {

enum class Label : std::int8_t { kNegative = -1, kPositive = 1 };

inline double sign(Label y) { return y == Label::kPositive ? 1.0 : -1.0; }

/// Non-owning view of one labeled row.
struct LabeledPoint {
  std::span<const double> features;
  Label label;
};

/// Dense binary-labeled data, stored row-major. Immutable once built.
class Dataset {
 public:
  Dataset() = default;

  /// features.size() must equal labels.size() * dim.
  Dataset(std::size_t dim, std::vector<double> features, std::vector<Label> labels,
          std::vector<std::string> feature_names = {});

  static Dataset from_rows(const std::vector<std::vector<double>>& rows,
                           const std::vector<Label>& labels);

  std::size_t size() const { return labels_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t n_plus() const { return positive_.size(); }
  std::size_t n_minus() const { return negative_.size(); }
  bool has_both_classes() const { return !positive_.empty() && !negative_.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {features_.data() + i * dim_, dim_};
  }
  Label label(std::size_t i) const { return labels_[i]; }
  LabeledPoint point(std::size_t i) const { return {row(i), labels_[i]}; }

  std::span<const Label> labels() const { return labels_; }
  std::span<const double> features() const { return features_; }
  std::span<const std::size_t> positive_indices() const { return positive_; }
  std::span<const std::size_t> negative_indices() const { return negative_; }
  std::span<const std::size_t> indices_of(Label y) const {
    return y == Label::kPositive ? positive_indices() : negative_indices();
  }
  const std::vector<std::string>& feature_names() const { return names_; }

  /// Rows at the given indices, in the given order.
  Dataset subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> features_;
  std::vector<Label> labels_;
  std::vector<std::size_t> positive_;
  std::vector<std::size_t> negative_;
  std::vector<std::string> names_;
};

/// Per-row loss weights 1/(2 n+) and 1/(2 n-): each class carries total mass 1/2.
struct ClassWeights {
  double positive;
  double negative;

  double of(Label y) const { return y == Label::kPositive ? positive : negative; }
};

/// Throws NumericError if either class is empty.
ClassWeights class_weights(const Dataset& data);

/// Throws NumericError if the requested class is empty.
double class_weight(Label y, const Dataset& data);

/// Reads a comma-separated file with a header row. Rows whose target cell
/// equals positive_label become +1, every other row -1. All other columns
/// must be finite reals. Throws InputError on I/O or parse problems and
/// NumericError when the result holds a single class.
Dataset load_csv(const std::filesystem::path& path, const std::string& target_column,
                 const std::string& positive_label);

struct HoldoutSplit {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

/// Stratified split: each class is shuffled on its own and cut so that the
/// train share of every class is within one row of train_fraction. Both
/// partitions keep at least one row of each class, otherwise NumericError.
HoldoutSplit split_holdout_indices(const Dataset& data, double train_fraction, std::uint64_t seed);

std::pair<Dataset, Dataset> split_holdout(const Dataset& data, double train_fraction,
                                          std::uint64_t seed);

}  // namespace pegasos
