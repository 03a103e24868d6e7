// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/linear.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pegasos/error.hpp"
#include "pegasos/roc.hpp"
#include "pegasos/sampler.hpp"
#include "pegasos/simd.hpp"

namespace pegasos {

namespace {

void check_dimension(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw InputError("dimension mismatch: model has " + std::to_string(expected) +
                     " features, data has " + std::to_string(got));
  }
}

}  // namespace

double hinge_objective(const LinearModel& model, const Dataset& data) {
  check_dimension(model.weights.size(), data.dim());
  const ClassWeights cw = class_weights(data);
  double loss = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Label y = data.label(i);
    const double margin = sign(y) * decision(model, data.row(i));
    loss += cw.of(y) * std::max(0.0, 1.0 - margin);
  }
  return model.lambda / 2.0 * simd::squared_norm(model.weights) + loss;
}

bool pegasos_step(std::span<double> w, LabeledPoint sample, std::size_t t, double lambda,
                  double bias, const ClassWeights& weights) {
  if (t == 0) throw InputError("pegasos step index starts at 1");
  check_dimension(w.size(), sample.features.size());
  const double y = sign(sample.label);
  const bool violated = y * (simd::dot(w, sample.features) + bias) < 1.0;
  const double td = static_cast<double>(t);
  const double shrink = 1.0 - 1.0 / td;
  if (violated) {
    simd::scale_add(w, shrink, y * weights.of(sample.label) / (lambda * td), sample.features);
  } else {
    simd::scale(w, shrink);
  }
  return violated;
}

void project(std::span<double> w, double lambda) {
  if (!(lambda > 0.0)) throw InputError("projection needs lambda > 0");
  const double norm = std::sqrt(simd::squared_norm(w));
  const double radius = 1.0 / std::sqrt(lambda);
  if (norm > radius) simd::scale(w, radius / norm);
}

double decision(const LinearModel& model, std::span<const double> x) {
  check_dimension(model.weights.size(), x.size());
  return simd::dot(model.weights, x) + model.bias;
}

std::vector<double> decision_scores(const LinearModel& model, const Dataset& data) {
  check_dimension(model.weights.size(), data.dim());
  std::vector<double> scores(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    scores[i] = simd::dot(model.weights, data.row(i)) + model.bias;
  }
  return scores;
}

LinearResult train_linear(const Dataset& data, const TrainOptions& options) {
  validate(options);
  const ClassWeights cw = class_weights(data);
  BalancedSampler sampler(data, options.seed);

  LinearResult result;
  LinearModel& model = result.model;
  TrainingTrace& trace = result.trace;
  model.weights.assign(data.dim(), 0.0);
  model.bias = options.bias;
  model.lambda = options.lambda;
  model.seed = options.seed;
  if (options.record_steps) trace.steps.reserve(options.iterations);

  double best = trace.baseline_auc;
  for (std::size_t t = 1; t <= options.iterations; ++t) {
    const Sample s = sampler.next();
    const bool violated = pegasos_step(model.weights, s.point, t, options.lambda, options.bias, cw);
    if (options.record_steps) trace.steps.push_back({s.index, violated});
    if (options.projection) project(model.weights, options.lambda);
    model.iterations_run = t;
    if (t % options.check_every == 0) {
      const double auc = roc_auc(decision_scores(model, data), data);
      if (detail::record_check(trace, best, t, auc, options.halting)) break;
    }
  }
  return result;
}

}  // namespace pegasos
