// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance harness. Prints one PASS/FAIL line per criterion; `--only N`
// runs a single criterion. Exit status is 0 only if every criterion run passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "json.hpp"
#include "pegasos/cli.hpp"
#include "pegasos/kernel.hpp"
#include "pegasos/linear.hpp"
#include "pegasos/model_selection.hpp"
#include "pegasos/roc.hpp"
#include "pegasos/rng.hpp"
#include "pegasos/sampler.hpp"
#include "pegasos/stop.hpp"
#include "test_support.hpp"

using namespace pegasos;
using namespace pegasos::testing;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

bool close(double a, double b, double rel, double abs = 0.0) {
  return std::abs(a - b) <= std::max(abs, rel * std::max(std::abs(a), std::abs(b)));
}

// 1. AUC coherence.
Verdict auc_coherence() {
  std::mt19937_64 gen(2026);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + gen() % 199;
    const bool ties = trial % 2 == 0;
    std::vector<double> scores(n);
    std::vector<Label> labels(n);
    std::normal_distribution<double> z;
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] = ties ? static_cast<double>(gen() % 5) : z(gen);
      labels[i] = gen() % 3 == 0 ? Label::kPositive : Label::kNegative;
    }
    labels[0] = Label::kPositive;
    labels[1] = Label::kNegative;
    const ScoredLabels d{scores, labels};
    const double trap = auc_trapezoid(roc_curve(d));
    const double pair = auc_pairwise(d);
    double wins = 0.0, pairs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] != Label::kPositive) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (labels[j] != Label::kNegative) continue;
        pairs += 1.0;
        wins += scores[i] > scores[j] ? 1.0 : scores[i] == scores[j] ? 0.5 : 0.0;
      }
    }
    worst = std::max({worst, std::abs(trap - pair), std::abs(pair - wins / pairs)});
  }
  return {worst <= 1e-12, fmt::format("1000 instances, max deviation {:.3g}", worst)};
}

// 2. Iterate vs closed-form accumulation.
Verdict closed_form() {
  std::mt19937_64 gen(7);
  double worst = 0.0;
  std::size_t mismatched = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Dataset d = gaussian_blobs(2 + gen() % 10, 5 + gen() % 40, 1 + gen() % 6, 0.8, 1000 + trial);
    TrainOptions o;
    o.lambda = std::pow(10.0, -3.0 + 5.0 * (gen() % 1000) / 1000.0);
    o.bias = (gen() % 9) * 0.25 - 1.0;
    o.iterations = 1 + gen() % 50;
    o.check_every = o.iterations + 1;
    o.seed = gen();
    o.record_steps = true;
    const auto r = train_linear(d, o);
    const ClassWeights c = class_weights(d);
    std::vector<double> sum(d.dim(), 0.0);
    for (std::size_t t = 1; t <= r.trace.steps.size(); ++t) {
      const auto& s = r.trace.steps[t - 1];
      double m = o.bias;
      if (t > 1) {
        double dot = 0.0;
        for (std::size_t k = 0; k < d.dim(); ++k) dot += sum[k] * d.row(s.row)[k];
        m += dot / (o.lambda * static_cast<double>(t - 1));
      }
      const double y = sign(d.label(s.row));
      const bool violated = y * m < 1.0;
      if (violated != s.violated) ++mismatched;
      if (violated) {
        for (std::size_t k = 0; k < d.dim(); ++k) sum[k] += c.of(d.label(s.row)) * y * d.row(s.row)[k];
      }
    }
    for (std::size_t k = 0; k < d.dim(); ++k) {
      const double expected = sum[k] / (o.lambda * static_cast<double>(o.iterations));
      const double got = r.model.weights[k];
      const double scale = std::max(std::abs(expected), 1e-300);
      if (expected != got) worst = std::max(worst, std::abs(got - expected) / scale);
    }
  }
  return {worst <= 1e-9 && mismatched == 0,
          fmt::format("100 runs, max relative error {:.3g}, violation mismatches {}", worst, mismatched)};
}

// 3. Linear and linear-kernel solvers agree.
Verdict linear_kernel_equivalence() {
  std::size_t sequence_mismatches = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Dataset d = gaussian_blobs(8, 32, 3, 0.8, 500 + seed);
    TrainOptions o;
    o.lambda = 0.05;
    o.bias = 0.0;
    o.iterations = 200;
    o.check_every = 200;
    o.halting = false;
    o.seed = seed;
    o.record_steps = true;
    const auto lin = train_linear(d, o);
    const auto ker = train_kernel(d, KernelSpec{}, o);
    if (lin.trace.steps.size() != ker.trace.steps.size()) {
      ++sequence_mismatches;
      continue;
    }
    for (std::size_t t = 0; t < lin.trace.steps.size(); ++t) {
      if (lin.trace.steps[t].row != ker.trace.steps[t].row ||
          lin.trace.steps[t].violated != ker.trace.steps[t].violated) {
        ++sequence_mismatches;
      }
    }
    const auto ls = decision_scores(lin.model, d), ks = kernel_scores(ker.model, d);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double err = std::abs(ls[i] - ks[i]) / std::max(1.0, std::abs(ls[i]));
      worst = std::max(worst, err);
    }
  }
  return {sequence_mismatches == 0 && worst <= 1e-9,
          fmt::format("20 seeds x 200 steps, sequence mismatches {}, max score error {:.3g}",
                      sequence_mismatches, worst)};
}

// 4. Projection keeps every iterate in the ball.
Verdict projection_bound() {
  double worst_excess = -1e300;
  for (double lambda : {0.01, 1.0, 100.0}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Dataset d = gaussian_blobs(6, 40, 3, 3.0, seed);
      const ClassWeights c = class_weights(d);
      BalancedSampler sampler(d, seed);
      std::vector<double> w(d.dim(), 0.0);
      for (std::size_t t = 1; t <= 500; ++t) {
        pegasos_step(w, sampler.next().point, t, lambda, 0.0, c);
        project(w, lambda);
        double n2 = 0.0;
        for (double v : w) n2 += v * v;
        worst_excess = std::max(worst_excess, std::sqrt(n2) - 1.0 / std::sqrt(lambda));
      }
      // The trainer applies the same projection.
      TrainOptions o;
      o.lambda = lambda;
      o.projection = true;
      o.iterations = 500;
      o.check_every = 500;
      o.halting = false;
      o.seed = seed;
      const auto r = train_linear(d, o);
      double n2 = 0.0;
      for (double v : r.model.weights) n2 += v * v;
      worst_excess = std::max(worst_excess, std::sqrt(n2) - 1.0 / std::sqrt(lambda));
    }
  }
  return {worst_excess <= 1e-9,
          fmt::format("3 lambdas x 10 seeds x 500 steps, max |w| - 1/sqrt(lambda) = {:.3g}", worst_excess)};
}

// 5. Separable recovery.
Verdict separable_recovery() {
  int perfect = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Dataset d = separable_2d(10, 190, 2.0, seed);
    TrainOptions o;
    o.lambda = 0.01;
    o.iterations = 1000;
    o.seed = seed;
    const auto r = train_linear(d, o);
    if (roc_auc(decision_scores(r.model, d), d) == 1.0) ++perfect;
  }
  return {perfect >= 9, fmt::format("training AUC 1.0 in {}/10 seeds", perfect)};
}

// 6. Stop-estimator arithmetic.
Verdict stop_arithmetic() {
  std::mt19937_64 gen(66);
  double worst = 0.0, worst_q = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    WaitingTimes times;
    const std::size_t n = 2 + gen() % 60;
    for (std::size_t i = 0; i < n; ++i) times.k.push_back(1 + gen() % 15);
    if (std::all_of(times.k.begin(), times.k.end(), [](std::size_t k) { return k == 1; })) times.k[0] = 2;
    long double sum = 0.0L;
    for (std::size_t k : times.k) sum += static_cast<long double>(k);
    const long double p = static_cast<long double>(n) / sum;
    const long double bc = p - p / (1.0L - p);
    const long double var = (1.0L - p) / (static_cast<long double>(n - 1) * p * p);
    const long double hw = 1.96L * std::sqrt(var / static_cast<long double>(n));

    const double p_hat = mle_p(times);
    const auto ci = confidence_interval(times, CenterMode::kVerbatim);
    const auto cs = confidence_interval(times, CenterMode::kStandard);
    auto err = [](double got, long double want) {
      return static_cast<double>(std::abs(static_cast<long double>(got) - want) /
                                 std::max(1.0L, std::abs(want)));
    };
    worst = std::max({worst, err(p_hat, p), err(bias_corrected_p(p_hat), bc),
                      err(mleb_variance(p_hat, n), var), err(ci.low, bc - hw), err(ci.high, bc + hw),
                      err(cs.low, 1.0L / p - hw), err(cs.high, 1.0L / p + hw)});
    auto pivot = [&](double x_bar) {
      return std::sqrt(static_cast<double>(n)) * (x_bar - p_hat + p_hat / (1.0 - p_hat)) /
             std::sqrt((1.0 - p_hat) / (static_cast<double>(n - 1) * p_hat * p_hat));
    };
    worst_q = std::max({worst_q, std::abs(pivot(ci.low) + 1.96), std::abs(pivot(ci.high) - 1.96)});
  }
  return {worst <= 1e-12 && worst_q <= 1e-9,
          fmt::format("100 samples, max error {:.3g}, max |pivot -/+ 1.96| {:.3g}", worst, worst_q)};
}

// 7. Estimator consistency.
Verdict estimator_consistency() {
  bool pass = true;
  std::string detail;
  for (double p : {0.2, 0.5, 0.8}) {
    int within = 0;
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
      Rng rng(derive_seed(77, {static_cast<std::uint64_t>(p * 10), rep}));
      WaitingTimes times;
      for (int i = 0; i < 200; ++i) {
        std::size_t k = 1;
        while (rng.uniform() >= p) ++k;
        times.k.push_back(k);
      }
      if (std::abs(mle_p(times) - p) <= 0.05) ++within;
    }
    pass = pass && within >= 45;
    detail += fmt::format("{}p={}: {}/50", detail.empty() ? "" : ", ", p, within);
  }
  return {pass, detail};
}

// 8. Ecoli cross-validation.
Verdict ecoli_reproduction() {
  const Dataset d = load_csv(ecoli_csv(), "class", "imU");
  std::vector<double> means;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    TrainOptions o;
    o.lambda = 1e-4;
    o.bias = 1.1111;
    o.iterations = 1000;
    o.check_every = 5;
    o.seed = seed;
    const auto folds = cross_validate(d, 5, o);
    double sum = 0.0;
    for (const auto& f : folds) sum += f.validation_auc;
    means.push_back(sum / 5.0);
  }
  std::string list;
  for (double m : means) list += fmt::format(" {:.4f}", m);
  const double med = median(means);
  return {med >= 0.85, fmt::format("median 5-fold CV AUC {:.4f} (target >= 0.85); per seed:{}", med, list)};
}

// 9. Mammography holdout.
Verdict mammography_reproduction() {
  const char* env = std::getenv("PEGASOS_MAMMOGRAPHY_CSV");
  const std::filesystem::path path = env ? env : data_dir() / "mammography.csv";
  if (!std::filesystem::exists(path)) {
    return {false, fmt::format("dataset not available at {}", path.string())};
  }
  const char* target = std::getenv("PEGASOS_MAMMOGRAPHY_TARGET");
  const char* positive = std::getenv("PEGASOS_MAMMOGRAPHY_POSITIVE");
  const Dataset d = load_csv(path, target ? target : "class", positive ? positive : "1");
  std::vector<double> aucs;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto [train, test] = split_holdout(d, 0.8, seed);
    TrainOptions o;
    o.lambda = 1.0;
    o.bias = -1.111;
    o.iterations = 1000;
    o.check_every = 8;
    o.seed = seed;
    aucs.push_back(evaluate_holdout(train, test, o));
  }
  const double med = median(aucs);
  return {med >= 0.80, fmt::format("m = {}, median holdout AUC {:.4f} (target >= 0.80)", d.size(), med)};
}

// 10. CLI determinism.
Verdict cli_determinism() {
  const auto dir = scratch_dir("acceptance_cli");
  const std::vector<std::string> data{"--data", ecoli_csv().string(), "--target-col", "class",
                                      "--positive-label", "imU"};
  auto with = [&](std::vector<std::string> head, const std::vector<std::string>& tail) {
    head.insert(head.end(), data.begin(), data.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  auto run_twice = [&](const std::string& name, const std::function<std::vector<std::string>(int)>& args,
                       const std::function<std::string(int, const std::string&)>& artifact) {
    std::string outputs[2];
    for (int i = 0; i < 2; ++i) {
      std::ostringstream out, err;
      if (cli::run(args(i), out, err) != 0) return name + " failed: " + err.str();
      outputs[i] = artifact(i, out.str());
    }
    return outputs[0] == outputs[1] ? std::string() : name + " differs";
  };
  auto file = [&](const std::string& stem, int i) { return (dir / fmt::format("{}{}", stem, i)).string(); };
  auto strip_timestamp = [](const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j["provenance"].erase("timestamp");
    return j.dump(2);
  };

  std::vector<std::string> problems;
  auto note = [&](const std::string& p) {
    if (!p.empty()) problems.push_back(p);
  };
  note(run_twice(
      "train", [&](int i) { return with({"train"}, {"--lambda", "0.001", "--seed", "5", "--check-every", "5", "--output", file("m.json", i)}); },
      [&](int i, const std::string& out) { return out + strip_timestamp(read_file(file("m.json", i))); }));
  note(run_twice(
      "train-kernel",
      [&](int i) { return with({"train"}, {"--kernel", "rbf", "--gamma", "0.5", "--iterations", "300", "--seed", "5", "--output", file("k.json", i)}); },
      [&](int i, const std::string& out) { return out + strip_timestamp(read_file(file("k.json", i))); }));
  note(run_twice(
      "cv",
      [&](int i) { return with({"cv"}, {"--lambda-grid", "0.0001,0.1", "--bias-grid", "linspace:-1:1:3", "--seed", "5", "--jobs", i == 0 ? "1" : "3", "--output", file("cv.csv", i)}); },
      [&](int i, const std::string& out) {
        return out + read_file(file("cv.csv", i)) + read_file(file("cv.csv", i) + ".summary.csv");
      }));
  note(run_twice(
      "curves",
      [&](int i) { return with({"curves"}, {"--type", "learning", "--lambda", "0.01", "--seed", "5", "--output", file("lc.csv", i)}); },
      [&](int i, const std::string&) { return read_file(file("lc.csv", i)); }));
  note(run_twice(
      "curves-validation",
      [&](int) { return with({"curves"}, {"--type", "validation", "--vary", "bias", "--values", "-1,0,1", "--seed", "5"}); },
      [&](int, const std::string& out) { return out; }));
  note(run_twice(
      "evaluate",
      [&](int i) { return std::vector<std::string>{"evaluate", "--data", ecoli_csv().string(), "--model", file("m.json", 0), "--roc-out", file("roc.csv", i)}; },
      [&](int i, const std::string& out) { return out + read_file(file("roc.csv", i)); }));
  note(run_twice(
      "evaluate-holdout",
      [&](int) { return with({"evaluate"}, {"--holdout", "0.2", "--lambda", "0.01", "--seed", "5"}); },
      [&](int, const std::string& out) { return out; }));
  note(run_twice(
      "estimate-stop",
      [&](int) { return with({"estimate-stop"}, {"--lambda", "0.0001", "--bias", "1.1111", "--seed", "5"}); },
      [&](int, const std::string& out) { return out; }));

  std::string detail = "train, train-kernel, cv, curves (2), evaluate (2), estimate-stop";
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no limit
  Verdict (*check)();
};

const Criterion kCriteria[] = {
    {1, "AUC coherence", 10.0, auc_coherence},
    {2, "update rule matches closed form", 5.0, closed_form},
    {3, "linear and kernel solvers agree", 30.0, linear_kernel_equivalence},
    {4, "projection bound", 0.0, projection_bound},
    {5, "separable recovery", 10.0, separable_recovery},
    {6, "stop-estimator arithmetic", 0.0, stop_arithmetic},
    {7, "estimator consistency", 0.0, estimator_consistency},
    {8, "Ecoli cross-validation AUC", 60.0, ecoli_reproduction},
    {9, "Mammography holdout AUC", 300.0, mammography_reproduction},
    {10, "CLI determinism", 0.0, cli_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  bool all = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0.0 && secs > c.limit_seconds) {
      v.pass = false;
      v.detail += fmt::format("; over time limit {:.0f}s", c.limit_seconds);
    }
    std::cout << fmt::format("criterion {:>2} {:<36} {} ({:.2f}s) {}\n", c.id, c.name,
                             v.pass ? "PASS" : "FAIL", secs, v.detail);
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
