// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pegasos/dataset.hpp"
#include "pegasos/training.hpp"

namespace pegasos {

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  double lambda = 1.0;
  std::size_t iterations_run = 0;
  std::uint64_t seed = 0;
};

struct LinearResult {
  LinearModel model;
  TrainingTrace trace;
};

/// Class-weighted primal objective:
///   lambda/2 |w|^2 + sum_pos [1 - (<w,x>+b)]_+ / (2 n+) + sum_neg [1 + (<w,x>+b)]_+ / (2 n-)
double hinge_objective(const LinearModel& model, const Dataset& data);

/// One class-weighted subgradient step with step size 1/(lambda t), in place.
/// With margin y(<w,x> + b) < 1 the sample's weighted feature vector is added;
/// otherwise w only shrinks by (1 - 1/t). Returns whether the margin was violated.
bool pegasos_step(std::span<double> w, LabeledPoint sample, std::size_t t, double lambda,
                  double bias, const ClassWeights& weights);

/// Rescales w onto the ball of radius 1/sqrt(lambda) if it lies outside.
void project(std::span<double> w, double lambda);

double decision(const LinearModel& model, std::span<const double> x);

std::vector<double> decision_scores(const LinearModel& model, const Dataset& data);

/// Balanced-sampling PEGASOS from w = 0. Every check_every iterations the
/// training ROC-AUC is computed; training halts as soon as a check fails to
/// beat the best AUC so far (starting from 0.5).
LinearResult train_linear(const Dataset& data, const TrainOptions& options);

}  // namespace pegasos
