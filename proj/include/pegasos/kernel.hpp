// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pegasos/dataset.hpp"
#include "pegasos/training.hpp"

namespace pegasos {

enum class KernelKind { kLinear, kRbf, kPolynomial };

std::string to_string(KernelKind kind);
/// Accepts "linear", "rbf", "poly"/"polynomial". Throws InputError otherwise.
KernelKind parse_kernel_kind(const std::string& name);

struct KernelSpec {
  KernelKind kind = KernelKind::kLinear;
  double gamma = 1.0;  // rbf
  int degree = 3;      // polynomial
  double coef0 = 0.0;  // polynomial
};

/// Throws InputError for gamma <= 0 (rbf) or degree < 1 (polynomial).
void validate(const KernelSpec& spec);

/// linear <x,x'>, rbf exp(-gamma |x-x'|^2), polynomial (<x,x'> + coef0)^degree.
double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> xp);

/// Kernel PEGASOS model. alpha[j] accumulates the class weight of training row
/// j once for every step at which that row was sampled and violated the margin,
/// so alpha[j] / class_weight(j) is a violation count.
struct KernelModel {
  std::vector<double> alpha;
  Dataset support;  // the training rows and labels alpha is indexed over
  KernelSpec kernel;
  double bias = 0.0;
  double lambda = 1.0;
  std::size_t t_final = 0;
  std::uint64_t seed = 0;
};

struct KernelResult {
  KernelModel model;
  TrainingTrace trace;
};

/// (1/(lambda t)) sum_j alpha[j] y_j K(x, x_j) + b. Requires t >= 1.
double kernel_decision(const KernelModel& model, std::span<const double> x, std::size_t t);

/// kernel_decision at the model's final iteration.
double kernel_decision(const KernelModel& model, std::span<const double> x);

std::vector<double> kernel_scores(const KernelModel& model, const Dataset& data);

/// Class-weighted primal objective in feature space, with
/// w = (1/(lambda t_final)) sum_j alpha[j] y_j phi(x_j).
double kernel_objective(const KernelModel& model, const Dataset& data);

/// Kernelized balanced-sampling PEGASOS.
///
/// At step t the sampled row's margin uses the coefficients accumulated
/// through step t-1, normalized by 1/(lambda (t-1)) (the decision is just b
/// at t = 1). This matches the linear solver's iterate w_t exactly, so with
/// the linear kernel both solvers see the same margins. Checks and halting
/// follow train_linear.
///
/// The Gram matrix is cached when the training set has at most
/// kGramCacheLimit rows; larger sets evaluate kernel columns on demand.
KernelResult train_kernel(const Dataset& data, const KernelSpec& kernel,
                          const TrainOptions& options);

inline constexpr std::size_t kGramCacheLimit = 2000;

}  // namespace pegasos
