// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "pegasos/error.hpp"
#include "pegasos/rng.hpp"

namespace pegasos {

Dataset::Dataset(std::size_t dim, std::vector<double> features, std::vector<Label> labels,
                 std::vector<std::string> feature_names)
    : dim_(dim),
      features_(std::move(features)),
      labels_(std::move(labels)),
      names_(std::move(feature_names)) {
  if (features_.size() != labels_.size() * dim_) {
    throw InputError("dataset: feature buffer holds " + std::to_string(features_.size()) +
                     " values, expected " + std::to_string(labels_.size()) + " rows x " +
                     std::to_string(dim_));
  }
  if (!names_.empty() && names_.size() != dim_) {
    throw InputError("dataset: feature name count does not match dimension");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    switch (labels_[i]) {
      case Label::kPositive: positive_.push_back(i); break;
      case Label::kNegative: negative_.push_back(i); break;
      default: throw InputError("dataset: label must be +1 or -1");
    }
  }
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows,
                           const std::vector<Label>& labels) {
  if (rows.size() != labels.size()) throw InputError("dataset: row and label counts differ");
  const std::size_t dim = rows.empty() ? 0 : rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) throw InputError("dataset: rows have differing dimensions");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Dataset(dim, std::move(flat), labels);
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<double> flat;
  flat.reserve(indices.size() * dim_);
  std::vector<Label> labels;
  labels.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw InputError("dataset: subset index out of range");
    const auto r = row(i);
    flat.insert(flat.end(), r.begin(), r.end());
    labels.push_back(labels_[i]);
  }
  return Dataset(dim_, std::move(flat), std::move(labels), names_);
}

ClassWeights class_weights(const Dataset& data) {
  return {class_weight(Label::kPositive, data), class_weight(Label::kNegative, data)};
}

double class_weight(Label y, const Dataset& data) {
  const std::size_t n = y == Label::kPositive ? data.n_plus() : data.n_minus();
  if (n == 0) {
    throw NumericError(std::string("class weight undefined: no ") +
                       (y == Label::kPositive ? "positive" : "negative") + " rows");
  }
  return 1.0 / (2.0 * static_cast<double>(n));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const std::string& target_column,
                 const std::string& positive_label) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open data file '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line)) throw InputError("data file '" + path.string() + "' is empty");
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  const auto header = split_fields(line);
  const auto target_it = std::find(header.begin(), header.end(), target_column);
  if (target_it == header.end()) {
    throw InputError("column '" + target_column + "' not found in '" + path.string() + "'");
  }
  const std::size_t target = static_cast<std::size_t>(target_it - header.begin());
  std::vector<std::string> names;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != target) names.emplace_back(header[c]);
  }

  const std::size_t dim = header.size() - 1;
  std::vector<double> features;
  std::vector<Label> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw InputError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " fields, found " +
                       std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c == target) continue;
      const auto cell = fields[c];
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() ||
          !std::isfinite(value)) {
        throw InputError(path.string() + ":" + std::to_string(line_no) + ": column '" +
                         std::string(header[c]) + "' holds non-numeric value '" +
                         std::string(cell) + "'");
      }
      features.push_back(value);
    }
    labels.push_back(fields[target] == positive_label ? Label::kPositive : Label::kNegative);
  }

  Dataset data(dim, std::move(features), std::move(labels), std::move(names));
  if (data.n_plus() == 0) {
    throw NumericError("no rows in '" + path.string() + "' have " + target_column + " = '" +
                       positive_label + "'");
  }
  if (data.n_minus() == 0) {
    throw NumericError("every row in '" + path.string() + "' has " + target_column + " = '" +
                       positive_label + "'; need a negative class");
  }
  return data;
}

HoldoutSplit split_holdout_indices(const Dataset& data, double train_fraction,
                                   std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("train fraction must lie strictly between 0 and 1");
  }
  const std::array<std::span<const std::size_t>, 2> classes{data.positive_indices(),
                                                            data.negative_indices()};
  std::array<double, 2> ideal{};
  std::array<std::size_t, 2> take{};
  for (std::size_t c = 0; c < 2; ++c) {
    const std::size_t n = classes[c].size();
    if (n < 2) {
      throw NumericError(std::string("cannot split: the ") + (c == 0 ? "positive" : "negative") +
                         " class has " + std::to_string(n) +
                         " row(s), each partition needs at least one");
    }
    ideal[c] = train_fraction * static_cast<double>(n);
    take[c] = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(ideal[c])), 1, n - 1);
  }

  // Nudge per-class counts toward the rounded overall train size without
  // moving any class more than one row from its ideal share.
  const auto total = static_cast<std::size_t>(std::llround(train_fraction * data.size()));
  while (take[0] + take[1] < total) {
    int best = -1;
    double gap = 0.0;
    for (int c = 0; c < 2; ++c) {
      const double g = ideal[c] - static_cast<double>(take[c]);
      if (g > gap && take[c] + 1 < classes[c].size()) best = c, gap = g;
    }
    if (best < 0) break;
    ++take[best];
  }
  while (take[0] + take[1] > total) {
    int best = -1;
    double gap = 0.0;
    for (int c = 0; c < 2; ++c) {
      const double g = static_cast<double>(take[c]) - ideal[c];
      if (g > gap && take[c] > 1) best = c, gap = g;
    }
    if (best < 0) break;
    --take[best];
  }

  Rng rng(seed);
  HoldoutSplit split;
  for (std::size_t c = 0; c < 2; ++c) {
    std::vector<std::size_t> shuffled(classes[c].begin(), classes[c].end());
    rng.shuffle(std::span(shuffled));
    split.train.insert(split.train.end(), shuffled.begin(), shuffled.begin() + take[c]);
    split.test.insert(split.test.end(), shuffled.begin() + take[c], shuffled.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

std::pair<Dataset, Dataset> split_holdout(const Dataset& data, double train_fraction,
                                          std::uint64_t seed) {
  const HoldoutSplit split = split_holdout_indices(data, train_fraction, seed);
  return {data.subset(split.train), data.subset(split.test)};
}

}  // namespace pegasos
