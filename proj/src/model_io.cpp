// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/model_io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pegasos/error.hpp"

namespace pegasos {

using nlohmann::json;

std::size_t ModelFile::dim() const {
  if (const auto* linear = std::get_if<LinearModel>(&fitted.model)) return linear->weights.size();
  return std::get<KernelModel>(fitted.model).support.dim();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json kernel_to_json(const KernelSpec& k) {
  return {{"kind", to_string(k.kind)}, {"gamma", k.gamma}, {"degree", k.degree}, {"coef0", k.coef0}};
}

KernelSpec kernel_from_json(const json& j) {
  KernelSpec k;
  k.kind = parse_kernel_kind(j.at("kind").get<std::string>());
  k.gamma = j.at("gamma").get<double>();
  k.degree = j.at("degree").get<int>();
  k.coef0 = j.at("coef0").get<double>();
  validate(k);
  return k;
}

}  // namespace

std::string to_json_text(const ModelFile& file) {
  const TrainOptions& o = file.options;
  json hyper = {{"lambda", o.lambda},         {"bias", o.bias},
                {"iterations", o.iterations}, {"check_every", o.check_every},
                {"seed", o.seed},             {"projection", o.projection},
                {"kernel", file.kernel ? kernel_to_json(*file.kernel) : json(nullptr)}};
  json out = {{"format_version", file.format_version},
              {"model_type", file.model_type()},
              {"hyperparameters", std::move(hyper)}};

  const TrainingTrace& trace = file.fitted.trace;
  if (const auto* linear = std::get_if<LinearModel>(&file.fitted.model)) {
    out["linear"] = {{"weights", linear->weights},
                     {"iterations_run", linear->iterations_run},
                     {"halted_early", trace.halted_early}};
  } else {
    const auto& km = std::get<KernelModel>(file.fitted.model);
    json rows = json::array();
    json labels = json::array();
    for (std::size_t i = 0; i < km.support.size(); ++i) {
      const auto r = km.support.row(i);
      rows.push_back(std::vector<double>(r.begin(), r.end()));
      labels.push_back(static_cast<int>(km.support.label(i)));
    }
    out["kernel"] = {{"alpha", km.alpha},
                     {"support_points", std::move(rows)},
                     {"labels", std::move(labels)},
                     {"t_final", km.t_final},
                     {"halted_early", trace.halted_early}};
  }
  out["provenance"] = {{"data", file.provenance.data_path},
                       {"target_column", file.provenance.target_column},
                       {"positive_label", file.provenance.positive_label},
                       {"timestamp", file.provenance.timestamp}};
  return out.dump(2) + "\n";
}

ModelFile from_json_text(const std::string& text) {
  try {
    const json in = json::parse(text);
    ModelFile file;
    file.format_version = in.at("format_version").get<int>();
    if (file.format_version != kModelFormatVersion) {
      throw InputError("unsupported model format_version " + std::to_string(file.format_version));
    }
    const json& hyper = in.at("hyperparameters");
    TrainOptions& o = file.options;
    o.lambda = hyper.at("lambda").get<double>();
    o.bias = hyper.at("bias").get<double>();
    o.iterations = hyper.at("iterations").get<std::size_t>();
    o.check_every = hyper.at("check_every").get<std::size_t>();
    o.seed = hyper.at("seed").get<std::uint64_t>();
    o.projection = hyper.at("projection").get<bool>();
    validate(o);

    const std::string type = in.at("model_type").get<std::string>();
    if (type == "linear") {
      const json& block = in.at("linear");
      LinearModel model;
      model.weights = block.at("weights").get<std::vector<double>>();
      model.bias = o.bias;
      model.lambda = o.lambda;
      model.seed = o.seed;
      model.iterations_run = block.at("iterations_run").get<std::size_t>();
      file.fitted.trace.halted_early = block.value("halted_early", false);
      file.fitted.model = std::move(model);
    } else if (type == "kernel") {
      file.kernel = kernel_from_json(hyper.at("kernel"));
      const json& block = in.at("kernel");
      const auto rows = block.at("support_points").get<std::vector<std::vector<double>>>();
      std::vector<Label> labels;
      for (int y : block.at("labels").get<std::vector<int>>()) {
        if (y != 1 && y != -1) throw InputError("model labels must be +1 or -1");
        labels.push_back(y == 1 ? Label::kPositive : Label::kNegative);
      }
      KernelModel model;
      model.support = Dataset::from_rows(rows, labels);
      model.alpha = block.at("alpha").get<std::vector<double>>();
      if (model.alpha.size() != model.support.size()) {
        throw InputError("model alpha length does not match support rows");
      }
      model.kernel = *file.kernel;
      model.bias = o.bias;
      model.lambda = o.lambda;
      model.seed = o.seed;
      model.t_final = block.at("t_final").get<std::size_t>();
      if (model.t_final == 0) throw InputError("model t_final must be at least 1");
      file.fitted.trace.halted_early = block.value("halted_early", false);
      file.fitted.model = std::move(model);
    } else {
      throw InputError("unknown model_type '" + type + "'");
    }

    const json& prov = in.at("provenance");
    file.provenance = {prov.at("data").get<std::string>(), prov.at("target_column").get<std::string>(),
                       prov.at("positive_label").get<std::string>(),
                       prov.at("timestamp").get<std::string>()};
    return file;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model file: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path, const ModelFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write model file '" + path.string() + "'");
  out << to_json_text(file);
  if (!out) throw InputError("failed writing model file '" + path.string() + "'");
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

}  // namespace pegasos
