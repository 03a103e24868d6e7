// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "pegasos/error.hpp"
#include "pegasos/roc.hpp"
#include "pegasos/sampler.hpp"
#include "pegasos/simd.hpp"

namespace pegasos {

std::string to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::kLinear: return "linear";
    case KernelKind::kRbf: return "rbf";
    case KernelKind::kPolynomial: return "poly";
  }
  return "unknown";
}

KernelKind parse_kernel_kind(const std::string& name) {
  if (name == "linear") return KernelKind::kLinear;
  if (name == "rbf") return KernelKind::kRbf;
  if (name == "poly" || name == "polynomial") return KernelKind::kPolynomial;
  throw InputError("unknown kernel '" + name + "' (expected linear, rbf or poly)");
}

void validate(const KernelSpec& spec) {
  if (spec.kind == KernelKind::kRbf && !(spec.gamma > 0.0 && std::isfinite(spec.gamma))) {
    throw InputError("rbf kernel needs gamma > 0");
  }
  if (spec.kind == KernelKind::kPolynomial) {
    if (spec.degree < 1) throw InputError("polynomial kernel needs degree >= 1");
    if (!std::isfinite(spec.coef0)) throw InputError("polynomial coef0 must be finite");
  }
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> xp) {
  if (x.size() != xp.size()) {
    throw InputError("kernel: vectors of dimension " + std::to_string(x.size()) + " and " +
                     std::to_string(xp.size()));
  }
  switch (spec.kind) {
    case KernelKind::kLinear:
      return simd::dot(x, xp);
    case KernelKind::kRbf:
      return std::exp(-spec.gamma * simd::squared_distance(x, xp));
    case KernelKind::kPolynomial: {
      const double base = simd::dot(x, xp) + spec.coef0;
      double out = 1.0;
      for (int i = 0; i < spec.degree; ++i) out *= base;
      return out;
    }
  }
  throw InputError("kernel: unknown kind");
}

double kernel_decision(const KernelModel& model, std::span<const double> x, std::size_t t) {
  if (t == 0) throw InputError("kernel decision needs t >= 1");
  if (x.size() != model.support.dim()) {
    throw InputError("dimension mismatch: model has " + std::to_string(model.support.dim()) +
                     " features, input has " + std::to_string(x.size()));
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < model.alpha.size(); ++j) {
    if (model.alpha[j] == 0.0) continue;
    sum += model.alpha[j] * sign(model.support.label(j)) *
           kernel_eval(model.kernel, x, model.support.row(j));
  }
  return sum / (model.lambda * static_cast<double>(t)) + model.bias;
}

double kernel_decision(const KernelModel& model, std::span<const double> x) {
  return kernel_decision(model, x, model.t_final);
}

std::vector<double> kernel_scores(const KernelModel& model, const Dataset& data) {
  std::vector<double> scores(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) scores[i] = kernel_decision(model, data.row(i));
  return scores;
}

double kernel_objective(const KernelModel& model, const Dataset& data) {
  if (model.t_final == 0) throw InputError("kernel objective needs a trained model");
  const auto& sv = model.support;
  double quad = 0.0;
  for (std::size_t i = 0; i < model.alpha.size(); ++i) {
    if (model.alpha[i] == 0.0) continue;
    for (std::size_t j = 0; j < model.alpha.size(); ++j) {
      if (model.alpha[j] == 0.0) continue;
      quad += model.alpha[i] * model.alpha[j] * sign(sv.label(i)) * sign(sv.label(j)) *
              kernel_eval(model.kernel, sv.row(i), sv.row(j));
    }
  }
  const double scale = 1.0 / (model.lambda * static_cast<double>(model.t_final));
  const ClassWeights cw = class_weights(data);
  double loss = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double margin = sign(data.label(i)) * kernel_decision(model, data.row(i));
    loss += cw.of(data.label(i)) * std::max(0.0, 1.0 - margin);
  }
  return model.lambda / 2.0 * scale * scale * quad + loss;
}

namespace {

// Kernel columns K(., j) over the training rows, cached or computed on demand.
class GramColumns {
 public:
  GramColumns(const Dataset& data, const KernelSpec& spec)
      : data_(data), spec_(spec), cached_(data.size() <= kGramCacheLimit), scratch_(data.size()) {
    if (!cached_) return;
    const std::size_t m = data.size();
    gram_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        const double k = kernel_eval(spec, data.row(i), data.row(j));
        gram_[i * m + j] = k;
        gram_[j * m + i] = k;
      }
    }
  }

  std::span<const double> column(std::size_t j) {
    const std::size_t m = data_.size();
    if (cached_) return {gram_.data() + j * m, m};
    for (std::size_t i = 0; i < m; ++i) scratch_[i] = kernel_eval(spec_, data_.row(i), data_.row(j));
    return scratch_;
  }

 private:
  const Dataset& data_;
  const KernelSpec& spec_;
  bool cached_;
  std::vector<double> gram_;
  std::vector<double> scratch_;
};

}  // namespace

KernelResult train_kernel(const Dataset& data, const KernelSpec& kernel,
                          const TrainOptions& options) {
  validate(options);
  validate(kernel);
  const ClassWeights cw = class_weights(data);
  BalancedSampler sampler(data, options.seed);
  GramColumns gram(data, kernel);

  KernelResult result;
  KernelModel& model = result.model;
  TrainingTrace& trace = result.trace;
  const std::size_t m = data.size();
  model.alpha.assign(m, 0.0);
  model.support = data;
  model.kernel = kernel;
  model.bias = options.bias;
  model.lambda = options.lambda;
  model.seed = options.seed;
  if (options.record_steps) trace.steps.reserve(options.iterations);

  // field[i] = sum_j alpha[j] y_j K(x_i, x_j), kept current as alpha grows.
  std::vector<double> field(m, 0.0);
  std::vector<double> scores(m);
  double best = trace.baseline_auc;
  for (std::size_t t = 1; t <= options.iterations; ++t) {
    const Sample s = sampler.next();
    const std::size_t r = s.index;
    const double y = sign(s.point.label);
    const double f =
        t == 1 ? options.bias
               : field[r] / (options.lambda * static_cast<double>(t - 1)) + options.bias;
    const bool violated = y * f < 1.0;
    if (violated) {
      const double increment = cw.of(s.point.label);
      model.alpha[r] += increment;
      const auto column = gram.column(r);
      for (std::size_t i = 0; i < m; ++i) field[i] += increment * y * column[i];
    }
    if (options.record_steps) trace.steps.push_back({r, violated});
    model.t_final = t;
    if (t % options.check_every == 0) {
      const double norm = 1.0 / (options.lambda * static_cast<double>(t));
      for (std::size_t i = 0; i < m; ++i) scores[i] = field[i] * norm + options.bias;
      const double auc = roc_auc(scores, data);
      if (detail::record_check(trace, best, t, auc, options.halting)) break;
    }
  }
  return result;
}

}  // namespace pegasos
