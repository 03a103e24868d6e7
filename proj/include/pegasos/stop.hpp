// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Early-stop interval selection. The number of AUC checks between successive
// improvements is modeled as Geometric(p); p is estimated by maximum
// likelihood from one probe run and a normal-approximation interval around
// the estimate supplies the integer check intervals that get tried.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pegasos/dataset.hpp"
#include "pegasos/training.hpp"

namespace pegasos {

struct WaitingTimes {
  std::vector<std::size_t> k;  // each >= 1
  std::size_t n() const { return k.size(); }
};

/// Gaps, in checks, between consecutive improvements (the first gap counts
/// from the start). Checks after the last improvement are dropped. Throws
/// NumericError if the trace never improved.
WaitingTimes collect_waiting_times(const TrainingTrace& trace);

/// n / sum(k).
double mle_p(const WaitingTimes& times);

/// p - p/(1-p), unclamped. Throws NumericError at p = 1.
double bias_corrected_p(double p_hat);

/// (1/(n-1)) (1-p)/p^2. Throws NumericError for n < 2.
double mleb_variance(double p_hat, std::size_t n);

/// Where the interval is centered.
///   kVerbatim: p - p/(1-p), the bias-corrected value as printed.
///   kStandard: 1/p, the geometric mean waiting time.
/// Both use the half-width 1.96 sqrt(mleb_variance / n).
enum class CenterMode { kVerbatim, kStandard };

std::string to_string(CenterMode mode);
CenterMode parse_center_mode(const std::string& name);

struct Interval {
  double low;
  double high;
};

inline constexpr double kNormalQuantile975 = 1.96;

/// Throws NumericError for n < 2, and for p = 1 in verbatim mode.
Interval confidence_interval(const WaitingTimes& times, CenterMode mode = CenterMode::kVerbatim);

struct StopStatistics {
  std::size_t n = 0;
  double p_hat = 0.0;
  std::optional<double> p_bc;      // absent when p_hat = 1
  std::optional<double> var_mleb;  // absent when n < 2
  std::optional<Interval> interval;
  CenterMode mode = CenterMode::kVerbatim;
  std::vector<std::size_t> candidates;
  std::vector<double> candidate_aucs;  // parallel to candidates
  std::size_t x_selected = 1;
};

/// Estimates only; candidates and x_selected are left for the caller. The
/// interval is skipped when it is undefined (n < 2, or p = 1 in verbatim mode).
StopStatistics stop_statistics(const WaitingTimes& times, CenterMode mode);

/// Integers ceil(low)..floor(high) within [1, max_x]; {1} if that is empty
/// or there is no interval.
std::vector<std::size_t> candidate_stop_values(const std::optional<Interval>& interval,
                                               std::size_t max_x);

/// Probe run (check every iteration, no halting) on the full data, then one
/// halting run per candidate interval scored by final training AUC. The best
/// candidate wins, ties to the smaller value. options.check_every and
/// options.halting are ignored. Throws NumericError if the probe never improves.
StopStatistics select_stop_parameter(const Dataset& data, const TrainOptions& options,
                                     CenterMode mode = CenterMode::kVerbatim);

}  // namespace pegasos
