// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "pegasos/error.hpp"
#include "pegasos/linear.hpp"
#include "pegasos/stop.hpp"
#include "test_support.hpp"

using namespace pegasos;
using namespace pegasos::testing;

namespace {
TrainingTrace trace_with_improvements(std::vector<std::size_t> positions, std::size_t total) {
  TrainingTrace t;
  t.improvement_checks = std::move(positions);
  for (std::size_t i = 1; i <= total; ++i) t.checks.push_back({i, 0.5});
  return t;
}
}  // namespace

TEST_CASE("collect_waiting_times examples") {
  CHECK(collect_waiting_times(trace_with_improvements({3, 5, 10}, 12)).k ==
        std::vector<std::size_t>{3, 2, 5});
  CHECK(collect_waiting_times(trace_with_improvements({1, 2, 3, 4}, 4)).k ==
        std::vector<std::size_t>{1, 1, 1, 1});
  CHECK_THROWS_AS(collect_waiting_times(trace_with_improvements({}, 10)), NumericError);
}

TEST_CASE("mle_p examples") {
  CHECK(mle_p({{3, 2, 5}}) == doctest::Approx(0.3));
  CHECK(mle_p({{1, 1, 1, 1}}) == 1.0);
  CHECK(mle_p({{4}}) == 0.25);
  CHECK(mle_p({{5, 5}}) == 0.2);
}

TEST_CASE("bias_corrected_p examples") {
  CHECK(bias_corrected_p(0.5) == doctest::Approx(-0.5));
  CHECK(bias_corrected_p(0.25) == doctest::Approx(0.25 - 0.25 / 0.75));
  CHECK(bias_corrected_p(0.1) == doctest::Approx(0.1 - 0.1 / 0.9));
  CHECK_THROWS_AS(bias_corrected_p(1.0), NumericError);
}

TEST_CASE("mleb_variance examples") {
  CHECK(mleb_variance(1.0, 4) == 0.0);
  CHECK(mleb_variance(0.5, 5) == doctest::Approx(0.5));
  CHECK(mleb_variance(0.25, 3) == doctest::Approx(6.0));
  CHECK_THROWS_AS(mleb_variance(0.5, 1), NumericError);
}

TEST_CASE("confidence interval for k = [2, 4, 6]") {
  const WaitingTimes times{{2, 4, 6}};
  // p = 0.25, var = 0.75 / (2 * 0.0625) = 6, half-width 1.96 sqrt(6 / 3).
  const double hw = 1.96 * std::sqrt(2.0);
  const auto v = confidence_interval(times, CenterMode::kVerbatim);
  const double center_v = 0.25 - 0.25 / 0.75;
  CHECK(v.low == doctest::Approx(center_v - hw));
  CHECK(v.high == doctest::Approx(center_v + hw));
  const auto s = confidence_interval(times, CenterMode::kStandard);
  CHECK(s.low == doctest::Approx(4.0 - hw));
  CHECK(s.high == doctest::Approx(4.0 + hw));
  CHECK(candidate_stop_values(s, 1000) == std::vector<std::size_t>{2, 3, 4, 5, 6});
  CHECK(candidate_stop_values(v, 1000) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("degenerate estimates") {
  CHECK_THROWS_AS(confidence_interval({{4}}, CenterMode::kStandard), NumericError);
  CHECK_THROWS_AS(confidence_interval({{1, 1, 1}}, CenterMode::kVerbatim), NumericError);
  const auto s = confidence_interval({{1, 1, 1}}, CenterMode::kStandard);
  CHECK(s.low == 1.0);
  CHECK(s.high == 1.0);

  const auto one = stop_statistics({{7}}, CenterMode::kStandard);
  CHECK(one.n == 1);
  CHECK_FALSE(one.var_mleb.has_value());
  CHECK_FALSE(one.interval.has_value());
  const auto all_ones = stop_statistics({{1, 1, 1}}, CenterMode::kVerbatim);
  CHECK(all_ones.p_hat == 1.0);
  CHECK_FALSE(all_ones.p_bc.has_value());
  CHECK_FALSE(all_ones.interval.has_value());
}

TEST_CASE("candidate_stop_values") {
  CHECK(candidate_stop_values(std::nullopt, 100) == std::vector<std::size_t>{1});
  CHECK(candidate_stop_values(Interval{-3.0, -1.0}, 100) == std::vector<std::size_t>{1});
  CHECK(candidate_stop_values(Interval{2.5, 2.9}, 100) == std::vector<std::size_t>{1});
  CHECK(candidate_stop_values(Interval{-0.7, 0.6}, 100) == std::vector<std::size_t>{1});
  CHECK(candidate_stop_values(Interval{4.59, 5.98}, 100) == std::vector<std::size_t>{5});
  CHECK(candidate_stop_values(Interval{3.0, 9.0}, 6) == std::vector<std::size_t>{3, 4, 5, 6});
  CHECK(candidate_stop_values(Interval{0.2, 2.0}, 100) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("estimator recovers p from geometric samples") {
  std::mt19937_64 gen(5);
  for (double p : {0.1, 0.3, 0.7}) {
    std::geometric_distribution<std::size_t> geo(p);
    WaitingTimes times;
    for (int i = 0; i < 20000; ++i) times.k.push_back(geo(gen) + 1);
    CHECK(mle_p(times) == doctest::Approx(p).epsilon(0.03));
    const auto s = confidence_interval(times, CenterMode::kStandard);
    CHECK((s.low + s.high) / 2.0 == doctest::Approx(1.0 / mle_p(times)));
  }
}

TEST_CASE("select_stop_parameter") {
  const Dataset d = gaussian_blobs(8, 70, 3, 0.6, 11);
  TrainOptions o;
  o.lambda = 0.01;
  o.iterations = 300;
  o.seed = 3;
  for (CenterMode mode : {CenterMode::kVerbatim, CenterMode::kStandard}) {
    const auto s = select_stop_parameter(d, o, mode);
    CHECK(s.mode == mode);
    REQUIRE_FALSE(s.candidates.empty());
    CHECK(s.candidates.size() == s.candidate_aucs.size());
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.candidates.size(); ++i) {
      if (s.candidate_aucs[i] > s.candidate_aucs[best]) best = i;
    }
    CHECK(s.x_selected == s.candidates[best]);
    for (std::size_t x : s.candidates) {
      CHECK(x >= 1);
      CHECK(x <= o.iterations);
    }
    const auto again = select_stop_parameter(d, o, mode);
    CHECK(again.x_selected == s.x_selected);
    CHECK(again.p_hat == s.p_hat);
  }
  const auto v = select_stop_parameter(d, o, CenterMode::kVerbatim);
  const auto st = select_stop_parameter(d, o, CenterMode::kStandard);
  CHECK(v.p_hat == st.p_hat);
  CHECK(v.n == st.n);
}

TEST_CASE("center mode names") {
  CHECK(parse_center_mode("verbatim") == CenterMode::kVerbatim);
  CHECK(parse_center_mode("standard") == CenterMode::kStandard);
  CHECK(to_string(CenterMode::kStandard) == "standard");
  CHECK_THROWS_AS(parse_center_mode("other"), InputError);
}
