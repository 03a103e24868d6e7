// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/stop.hpp"

#include <cmath>
#include <algorithm>

#include "pegasos/error.hpp"
#include "pegasos/linear.hpp"
#include "pegasos/rng.hpp"
#include "pegasos/roc.hpp"

namespace pegasos {

WaitingTimes collect_waiting_times(const TrainingTrace& trace) {
  if (trace.improvement_checks.empty()) {
    throw NumericError("training AUC never improved; the waiting-time sample is empty");
  }
  WaitingTimes times;
  std::size_t previous = 0;
  for (std::size_t check : trace.improvement_checks) {
    if (check <= previous) throw InputError("improvement checks must be strictly increasing");
    times.k.push_back(check - previous);
    previous = check;
  }
  return times;
}

double mle_p(const WaitingTimes& times) {
  if (times.k.empty()) throw NumericError("cannot estimate p from an empty sample");
  std::size_t total = 0;
  for (std::size_t k : times.k) {
    if (k < 1) throw InputError("waiting times must be at least 1");
    total += k;
  }
  return static_cast<double>(times.n()) / static_cast<double>(total);
}

namespace {

void check_probability(double p_hat) {
  if (!(p_hat > 0.0 && p_hat <= 1.0)) throw InputError("p estimate must lie in (0, 1]");
}

}  // namespace

double bias_corrected_p(double p_hat) {
  check_probability(p_hat);
  if (p_hat == 1.0) throw NumericError("bias correction p - p/(1-p) is singular at p = 1");
  return p_hat - p_hat / (1.0 - p_hat);
}

double mleb_variance(double p_hat, std::size_t n) {
  check_probability(p_hat);
  if (n < 2) throw NumericError("variance estimate needs at least two waiting times");
  return (1.0 - p_hat) / (static_cast<double>(n - 1) * p_hat * p_hat);
}

std::string to_string(CenterMode mode) {
  return mode == CenterMode::kVerbatim ? "verbatim" : "standard";
}

CenterMode parse_center_mode(const std::string& name) {
  if (name == "verbatim") return CenterMode::kVerbatim;
  if (name == "standard") return CenterMode::kStandard;
  throw InputError("unknown mode '" + name + "' (expected verbatim or standard)");
}

Interval confidence_interval(const WaitingTimes& times, CenterMode mode) {
  const double p = mle_p(times);
  const std::size_t n = times.n();
  const double variance = mleb_variance(p, n);
  const double center = mode == CenterMode::kVerbatim ? bias_corrected_p(p) : 1.0 / p;
  const double half_width = kNormalQuantile975 * std::sqrt(variance) / std::sqrt(static_cast<double>(n));
  return {center - half_width, center + half_width};
}

StopStatistics stop_statistics(const WaitingTimes& times, CenterMode mode) {
  StopStatistics stats;
  stats.mode = mode;
  stats.n = times.n();
  stats.p_hat = mle_p(times);
  if (stats.p_hat < 1.0) stats.p_bc = bias_corrected_p(stats.p_hat);
  if (stats.n >= 2) stats.var_mleb = mleb_variance(stats.p_hat, stats.n);
  const bool center_defined = mode == CenterMode::kStandard || stats.p_hat < 1.0;
  if (stats.var_mleb && center_defined) stats.interval = confidence_interval(times, mode);
  return stats;
}

std::vector<std::size_t> candidate_stop_values(const std::optional<Interval>& interval,
                                               std::size_t max_x) {
  std::vector<std::size_t> out;
  if (interval && max_x >= 1) {
    const double low = std::max(std::ceil(interval->low), 1.0);
    const double high = std::min(std::floor(interval->high), static_cast<double>(max_x));
    for (double x = low; x <= high; x += 1.0) out.push_back(static_cast<std::size_t>(x));
  }
  if (out.empty()) out.push_back(1);
  return out;
}

StopStatistics select_stop_parameter(const Dataset& data, const TrainOptions& options,
                                     CenterMode mode) {
  TrainOptions probe = options;
  probe.check_every = 1;
  probe.halting = false;
  probe.record_steps = false;
  const LinearResult probe_run = train_linear(data, probe);

  StopStatistics stats = stop_statistics(collect_waiting_times(probe_run.trace), mode);
  stats.candidates = candidate_stop_values(stats.interval, options.iterations);

  double best_auc = -1.0;
  for (std::size_t x : stats.candidates) {
    TrainOptions trial = options;
    trial.check_every = x;
    trial.halting = true;
    trial.record_steps = false;
    trial.seed = derive_seed(options.seed, {x});
    const LinearResult run = train_linear(data, trial);
    const double auc = roc_auc(decision_scores(run.model, data), data);
    stats.candidate_aucs.push_back(auc);
    if (auc > best_auc) {
      best_auc = auc;
      stats.x_selected = x;
    }
  }
  return stats;
}

}  // namespace pegasos
