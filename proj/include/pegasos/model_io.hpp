// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "pegasos/kernel.hpp"
#include "pegasos/model_selection.hpp"
#include "pegasos/training.hpp"

namespace pegasos {

inline constexpr int kModelFormatVersion = 1;

struct Provenance {
  std::string data_path;
  std::string target_column;
  std::string positive_label;
  std::string timestamp;  // ISO-8601 UTC
};

/// Everything needed to score new data with a trained model.
///
/// JSON layout (top-level keys): format_version, model_type ("linear" or
/// "kernel"), hyperparameters, linear or kernel, provenance.
struct ModelFile {
  int format_version = kModelFormatVersion;
  TrainOptions options;
  std::optional<KernelSpec> kernel;  // set iff model_type is "kernel"
  FittedModel fitted;
  Provenance provenance;

  std::string model_type() const { return kernel ? "kernel" : "linear"; }
  std::size_t dim() const;
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

std::string to_json_text(const ModelFile& file);
/// Throws InputError on malformed JSON or unsupported format_version.
ModelFile from_json_text(const std::string& text);

void save_model(const std::filesystem::path& path, const ModelFile& file);
ModelFile load_model(const std::filesystem::path& path);

}  // namespace pegasos
