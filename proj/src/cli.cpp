// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#include "pegasos/cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "pegasos/dataset.hpp"
#include "pegasos/error.hpp"
#include "pegasos/kernel.hpp"
#include "pegasos/model_io.hpp"
#include "pegasos/model_selection.hpp"
#include "pegasos/parallel.hpp"
#include "pegasos/roc.hpp"
#include "pegasos/stop.hpp"

namespace pegasos::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InputError("'" + std::string(text) + "' is not a number");
  }
  return value;
}

std::uint64_t seed_from_environment() {
  const char* env = std::getenv("PEGASOS_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("PEGASOS_SEED='" + std::string(text) + "' is not an unsigned integer");
  }
  return seed;
}

// Output sink that is either a file or the command's stdout stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw InputError("cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct DataFlags {
  std::string path;
  std::string target_column;
  std::string positive_label;

  void add(CLI::App* cmd, bool required = true) {
    auto* d = cmd->add_option("--data", path, "CSV file with a header row");
    auto* t = cmd->add_option("--target-col", target_column, "Column holding the class");
    auto* p = cmd->add_option("--positive-label", positive_label,
                              "Target value of the positive (minority) class");
    if (required) {
      d->required();
      t->required();
      p->required();
    }
  }

  Dataset load() const { return load_csv(path, target_column, positive_label); }
};

struct TrainFlags {
  double lambda = 1.0;
  double bias = 0.0;
  std::size_t iterations = 1000;
  std::optional<std::size_t> check_every;
  std::string kernel;
  double gamma = 1.0;
  int degree = 3;
  double coef0 = 0.0;
  bool projection = false;
  std::optional<std::uint64_t> seed;

  void add_core(CLI::App* cmd) {
    cmd->add_option("--lambda", lambda, "Regularization strength (> 0)")->capture_default_str();
    cmd->add_option("--bias", bias, "Fixed bias offset b")->capture_default_str();
    cmd->add_option("--iterations", iterations, "Training iterations T")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--check-every", check_every,
                    "Stop parameter X: check training AUC every X iterations (default: T)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "Random seed (default: $PEGASOS_SEED or 1)");
  }

  void add_model(CLI::App* cmd) {
    cmd->add_option("--kernel", kernel, "Kernel solver: linear, rbf or poly (default: primal linear)")
        ->check(CLI::IsMember({"linear", "rbf", "poly"}));
    cmd->add_option("--gamma", gamma, "RBF width")->capture_default_str();
    cmd->add_option("--degree", degree, "Polynomial degree")->capture_default_str();
    cmd->add_option("--coef0", coef0, "Polynomial offset")->capture_default_str();
    cmd->add_flag("--projection", projection, "Project w onto the 1/sqrt(lambda) ball");
  }

  std::uint64_t resolved_seed() const { return seed ? *seed : seed_from_environment(); }

  TrainOptions options() const {
    TrainOptions o;
    o.lambda = lambda;
    o.bias = bias;
    o.iterations = iterations;
    o.check_every = check_every.value_or(iterations);
    o.projection = projection;
    o.seed = resolved_seed();
    validate(o);
    return o;
  }

  std::optional<KernelSpec> kernel_spec() const {
    if (kernel.empty()) return std::nullopt;
    KernelSpec spec{parse_kernel_kind(kernel), gamma, degree, coef0};
    validate(spec);
    return spec;
  }
};

std::string fixed4(double v) { return fmt::format("{:.4f}", v); }

std::string optional_value(const std::optional<double>& v) {
  return v ? fmt::format("{}", *v) : std::string("n/a");
}

// ---------------------------------------------------------------------------

struct TrainCommand {
  DataFlags data;
  TrainFlags train;
  std::string output;

  void add(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand("train", "Train a model and write it as JSON");
    data.add(cmd);
    train.add_core(cmd);
    train.add_model(cmd);
    cmd->add_option("--output", output, "Model file to write")->required();
  }

  int run(std::ostream& out) const {
    const TrainOptions options = train.options();
    const auto kernel = train.kernel_spec();
    const Dataset dataset = data.load();

    ModelFile file;
    file.options = options;
    file.kernel = kernel;
    file.fitted = fit(dataset, options, kernel);
    file.provenance = {data.path, data.target_column, data.positive_label, utc_timestamp()};
    save_model(output, file);

    const double auc = roc_auc(file.fitted.scores(dataset), dataset);
    const std::size_t iterations_run =
        kernel ? std::get<KernelModel>(file.fitted.model).t_final
               : std::get<LinearModel>(file.fitted.model).iterations_run;
    out << fmt::format("model_type={} training_auc={} iterations_run={} halted_early={}\n",
                       file.model_type(), fixed4(auc), iterations_run,
                       file.fitted.trace.halted_early);
    return kExitOk;
  }
};

struct CvCommand {
  DataFlags data;
  std::size_t folds = 5;
  std::size_t iterations = 1000;
  std::string lambda_grid;
  std::string bias_grid = "linspace:-2:2:10";
  std::string mode = "verbatim";
  std::optional<std::uint64_t> seed;
  std::size_t jobs = default_jobs();
  std::string output;
  std::string summary;

  void add(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand("cv", "Grid search over (lambda, bias) with k-fold CV");
    data.add(cmd);
    cmd->add_option("--folds", folds, "Number of stratified folds (>= 2)")->capture_default_str();
    cmd->add_option("--iterations", iterations, "Training iterations T")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--lambda-grid", lambda_grid,
                    "Comma list of lambdas (default 0.0001,...,1000 by decades)");
    cmd->add_option("--bias-grid", bias_grid, "Comma list or linspace:LO:HI:N")
        ->capture_default_str();
    cmd->add_option("--mode", mode, "Stop-interval centering")
        ->check(CLI::IsMember({"verbatim", "standard"}))
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Random seed (default: $PEGASOS_SEED or 1)");
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--output", output, "Per-fold scores CSV")->required();
    cmd->add_option("--summary", summary, "Per-combination mean CSV (default: <output>.summary.csv)");
  }

  int run(std::ostream& out) const {
    if (folds < 2) throw InputError("--folds must be at least 2");
    GridSpec grid = GridSpec::defaults();
    if (!lambda_grid.empty()) grid.lambdas = parse_value_list(lambda_grid);
    grid.biases = parse_value_list(bias_grid);
    GridOptions options;
    options.folds = folds;
    options.iterations = iterations;
    options.seed = seed ? *seed : seed_from_environment();
    options.stop_mode = parse_center_mode(mode);
    options.jobs = jobs;

    const Dataset dataset = data.load();
    const CVResult result = grid_search(dataset, grid, options);

    {
      Sink scores(output, out);
      *scores << "lambda,bias,stop_x,fold,auc\n";
      for (const GridRow& row : result.rows) {
        for (std::size_t f = 0; f < row.fold_aucs.size(); ++f) {
          *scores << fmt::format("{},{},{},{},{}\n", row.lambda, row.bias, row.stop.x_selected, f,
                                 row.fold_aucs[f]);
        }
      }
    }
    {
      Sink means(summary.empty() ? output + ".summary.csv" : summary, out);
      *means << "lambda,bias,stop_x,mean_auc\n";
      for (const GridRow& row : result.rows) {
        *means << fmt::format("{},{},{},{}\n", row.lambda, row.bias, row.stop.x_selected,
                              row.mean_auc);
      }
    }
    const GridRow& best = result.best_row();
    out << fmt::format("best lambda={} bias={:.4f} stop_x={} mean_auc={}\n", best.lambda,
                       best.bias, best.stop.x_selected, fixed4(best.mean_auc));
    return kExitOk;
  }
};

struct CurvesCommand {
  DataFlags data;
  TrainFlags train;
  std::string type;
  std::string proportions = "0.2,0.4,0.6,0.8,1.0";
  std::string vary;
  std::string values;
  std::size_t folds = 5;
  std::size_t jobs = default_jobs();
  std::string output;

  void add(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand("curves", "Learning or validation curves as CSV");
    data.add(cmd);
    train.add_core(cmd);
    cmd->add_option("--type", type, "learning or validation")
        ->required()
        ->check(CLI::IsMember({"learning", "validation"}));
    cmd->add_option("--proportions", proportions, "Training proportions (learning curves)")
        ->capture_default_str();
    cmd->add_option("--vary", vary, "Hyperparameter to vary (validation curves)")
        ->check(CLI::IsMember({"lambda", "bias"}));
    cmd->add_option("--values", values, "Comma list or linspace:LO:HI:N (validation curves)");
    cmd->add_option("--folds", folds, "Number of stratified folds (>= 2)")->capture_default_str();
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--output", output, "CSV file (default: stdout)");
  }

  int run(std::ostream& out) const {
    if (folds < 2) throw InputError("--folds must be at least 2");
    const TrainOptions options = train.options();
    std::vector<CurveRow> rows;
    if (type == "learning") {
      const auto props = parse_value_list(proportions);
      rows = learning_curve(data.load(), options, props, folds, jobs);
    } else {
      if (vary.empty() || values.empty()) {
        throw InputError("validation curves need --vary and --values");
      }
      const auto vals = parse_value_list(values);
      const auto which = vary == "lambda" ? Hyperparameter::kLambda : Hyperparameter::kBias;
      rows = validation_curve(data.load(), which, vals, options, folds, jobs);
    }
    Sink sink(output, out);
    *sink << "proportion_or_value,fold,train_auc,cv_auc\n";
    for (const CurveRow& r : rows) {
      *sink << fmt::format("{},{},{},{}\n", r.value, r.fold, r.train_auc, r.validation_auc);
    }
    return kExitOk;
  }
};

struct EvaluateCommand {
  DataFlags data;
  TrainFlags train;
  std::string model;
  std::optional<double> holdout;
  std::string roc_out;

  void add(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "evaluate", "ROC-AUC of a saved model on data, or of a fresh model on a holdout split");
    data.add(cmd, false);
    train.add_core(cmd);
    train.add_model(cmd);
    cmd->add_option("--model", model, "Saved model JSON");
    cmd->add_option("--holdout", holdout, "Test fraction for a stratified split (e.g. 0.2)");
    cmd->add_option("--roc-out", roc_out, "Write the ROC curve as fpr,tpr CSV");
  }

  int run(std::ostream& out) const {
    if (data.path.empty()) throw InputError("--data is required");
    if (model.empty() == !holdout.has_value()) {
      throw InputError("evaluate needs exactly one of --model or --holdout");
    }
    std::vector<double> scores;
    Dataset test;
    if (!model.empty()) {
      const ModelFile file = load_model(model);
      const std::string target =
          data.target_column.empty() ? file.provenance.target_column : data.target_column;
      const std::string positive =
          data.positive_label.empty() ? file.provenance.positive_label : data.positive_label;
      test = load_csv(data.path, target, positive);
      if (test.dim() != file.dim()) {
        throw InputError(fmt::format("model expects {} features but '{}' has {}", file.dim(),
                                     data.path, test.dim()));
      }
      scores = file.fitted.scores(test);
    } else {
      if (data.target_column.empty() || data.positive_label.empty()) {
        throw InputError("--target-col and --positive-label are required with --holdout");
      }
      if (!(*holdout > 0.0 && *holdout < 1.0)) throw InputError("--holdout must lie in (0, 1)");
      const TrainOptions options = train.options();
      auto [train_set, test_set] = split_holdout(data.load(), 1.0 - *holdout, options.seed);
      test = std::move(test_set);
      scores = fit(train_set, options, train.kernel_spec()).scores(test);
    }
    const double auc = roc_auc(scores, test);
    if (!roc_out.empty()) {
      Sink sink(roc_out, out);
      *sink << "fpr,tpr\n";
      for (const RocPoint& p : roc_curve({scores, test.labels()})) {
        *sink << fmt::format("{},{}\n", p.fpr, p.tpr);
      }
    }
    out << "roc_auc=" << fixed4(auc) << "\n";
    return kExitOk;
  }
};

struct EstimateStopCommand {
  DataFlags data;
  TrainFlags train;
  std::string mode = "verbatim";

  void add(CLI::App& app) {
    CLI::App* cmd =
        app.add_subcommand("estimate-stop", "Estimate the early-stop check interval X");
    data.add(cmd);
    train.add_core(cmd);
    cmd->add_option("--mode", mode, "Interval centering")
        ->check(CLI::IsMember({"verbatim", "standard"}))
        ->capture_default_str();
  }

  int run(std::ostream& out) const {
    const TrainOptions options = train.options();
    const StopStatistics s = select_stop_parameter(data.load(), options, parse_center_mode(mode));
    out << fmt::format("mode={}\n", to_string(s.mode));
    out << fmt::format("n={}\n", s.n);
    out << fmt::format("p_hat={}\n", s.p_hat);
    out << fmt::format("p_bias_corrected={}\n", optional_value(s.p_bc));
    out << fmt::format("var_mleb={}\n", optional_value(s.var_mleb));
    out << fmt::format("ci_low={}\n", optional_value(s.interval ? std::optional(s.interval->low)
                                                                  : std::nullopt));
    out << fmt::format("ci_high={}\n", optional_value(s.interval ? std::optional(s.interval->high)
                                                                   : std::nullopt));
    out << fmt::format("candidates={}\n", fmt::join(s.candidates, ","));
    out << fmt::format("x_selected={}\n", s.x_selected);
    return kExitOk;
  }
};

}  // namespace

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> values;
  if (text.starts_with("linspace:")) {
    std::vector<std::string_view> parts;
    std::string_view rest = std::string_view(text).substr(9);
    for (std::size_t pos; (pos = rest.find(':')) != std::string_view::npos;) {
      parts.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    parts.push_back(rest);
    if (parts.size() != 3) throw InputError("expected linspace:LO:HI:N, got '" + text + "'");
    const double n = parse_double(parts[2]);
    if (n < 1 || n != static_cast<double>(static_cast<std::size_t>(n))) {
      throw InputError("linspace count must be a positive integer");
    }
    return linspace(parse_double(parts[0]), parse_double(parts[1]), static_cast<std::size_t>(n));
  }
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    values.push_back(parse_double(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cost-sensitive PEGASOS SVM for imbalanced binary classification", "pegasos"};
  app.require_subcommand(1);
  TrainCommand train;
  CvCommand cv;
  CurvesCommand curves;
  EvaluateCommand evaluate;
  EstimateStopCommand estimate;
  train.add(app);
  cv.add(app);
  curves.add(app);
  evaluate.add(app);
  estimate.add(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand("train")) return train.run(out);
    if (app.got_subcommand("cv")) return cv.run(out);
    if (app.got_subcommand("curves")) return curves.run(out);
    if (app.got_subcommand("evaluate")) return evaluate.run(out);
    if (app.got_subcommand("estimate-stop")) return estimate.run(out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace pegasos::cli
