// Command-line front end: complete-data selection, missing-data selection
// via multiple imputation, the MCAR repetition experiment, and boxplot
// rendering from a saved summary.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fbfmi/csv.hpp"
#include "fbfmi/errors.hpp"
#include "fbfmi/experiment.hpp"
#include "fbfmi/fbf.hpp"
#include "fbfmi/impute.hpp"
#include "fbfmi/mifbf.hpp"
#include "fbfmi/svgplot.hpp"

namespace {

using namespace fbfmi;

// Options shared by every analysis subcommand.
struct DataOpts {
  std::string data_path;
  std::string response;
  std::vector<std::string> predictors;  // empty = every non-response column
  ModelPrior prior = ModelPrior::kUniform;
  std::optional<double> fraction_b;
  int threads = 0;
};

void add_data_options(CLI::App* cmd, DataOpts* opts) {
  cmd->add_option("--data", opts->data_path, "input CSV (header row; NA or empty = missing)")
      ->required();
  cmd->add_option("--response", opts->response, "response column name")->required();
  cmd->add_option("--predictors", opts->predictors,
                  "predictor column names (default: every non-response column)")
      ->delimiter(',');
  cmd->add_option("--prior", opts->prior, "model prior: uniform or scott-berger")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ModelPrior>{{"uniform", ModelPrior::kUniform},
                                            {"scott-berger", ModelPrior::kScottBerger}},
          CLI::ignore_case))
      ->default_str("uniform");
  cmd->add_option("--fraction-b", opts->fraction_b,
                  "explicit likelihood fraction in (0,1]; default: minimal fraction "
                  "(k+1)/n from the full design");
  cmd->add_option("--threads", opts->threads,
                  "worker threads; 0 = hardware concurrency")
      ->capture_default_str();
}

std::vector<std::string> resolve_predictors(const DataOpts& opts) {
  if (!opts.predictors.empty()) return opts.predictors;
  return non_response_columns(opts.data_path, opts.response);
}

std::string model_label(const ModelIndex& gamma, const std::vector<std::string>& names) {
  if (gamma.size() == 0) return "(intercept only)";
  std::string out = "{";
  bool first = true;
  for (int j : gamma.included()) {
    if (!first) out += ", ";
    out += names[static_cast<std::size_t>(j)];
    first = false;
  }
  return out + "}";
}

void print_selection(const SelectionResult& result, const std::vector<std::string>& names,
                     int top) {
  std::printf("fraction b = %.10g\n", result.fraction_b);
  std::printf("model prior: %s\n",
              result.prior == ModelPrior::kUniform ? "uniform" : "scott-berger");
  std::printf("models evaluated: %zu\n", result.log_fbf.size());
  std::printf("\ninclusion probabilities:\n");
  for (int j = 0; j < result.p; ++j) {
    std::printf("  %-12s %.6f\n", names[static_cast<std::size_t>(j)].c_str(),
                result.inclusion(j));
  }

  std::vector<std::size_t> order(result.post_prob.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.post_prob[a] > result.post_prob[b];
  });
  const int shown = std::min<int>(top, static_cast<int>(order.size()));
  std::printf("\ntop %d models by posterior probability:\n", shown);
  for (int i = 0; i < shown; ++i) {
    const ModelIndex gamma{static_cast<uint32_t>(order[static_cast<std::size_t>(i)]),
                           result.p};
    std::printf("  %.6f  %s\n", result.post_prob[order[static_cast<std::size_t>(i)]],
                model_label(gamma, names).c_str());
  }
}

int run_select(const DataOpts& opts, int top) {
  const auto predictors = resolve_predictors(opts);
  const Dataset d = ingest_csv(opts.data_path, opts.response, predictors);
  if (!d.fully_observed()) {
    fail(ErrorKind::InvalidArgument,
         "dataset has " + std::to_string(d.missing_count()) +
             " missing predictor cells; use impute-select");
  }
  SelectOptions sel;
  sel.prior = opts.prior;
  sel.fraction_b = opts.fraction_b;
  sel.threads = opts.threads;
  const SelectionResult result = select_complete(d.x, d.y, sel);
  std::printf("n = %d rows, p = %d predictors (complete data)\n", d.n_rows(),
              d.n_predictors());
  print_selection(result, d.names, top);
  return 0;
}

int run_impute_select(const DataOpts& opts, const GibbsConfig& gibbs, int top) {
  const auto predictors = resolve_predictors(opts);
  const Dataset d = ingest_csv(opts.data_path, opts.response, predictors);
  const ImputationSet imps = impute(d, gibbs);
  SelectOptions sel;
  sel.prior = opts.prior;
  sel.fraction_b = opts.fraction_b;
  sel.threads = opts.threads;
  const SelectionResult result = select_mi(imps, sel);
  std::printf("n = %d rows, p = %d predictors, %d missing cells, M = %d imputations "
              "(burn-in %d, spacing %d, seed %llu)\n",
              d.n_rows(), d.n_predictors(), d.missing_count(), gibbs.m, gibbs.burn_in,
              gibbs.spacing, static_cast<unsigned long long>(gibbs.seed));
  print_selection(result, d.names, top);
  return 0;
}

int run_experiment_cmd(const ExperimentSpec& spec, const std::string& out_dir) {
  const auto predictors =
      spec.predictors.empty() ? non_response_columns(spec.data_path, spec.response)
                              : spec.predictors;
  ExperimentSpec full = spec;
  full.predictors = predictors;
  const Dataset d = ingest_csv(full.data_path, full.response, predictors);

  const std::vector<RunRecord> records = run_experiment(full, d);
  const EmittedFiles files = emit_results(records, d.names, full.miss_cols, out_dir);

  int failed = 0;
  for (const auto& r : records) {
    if (!r.ok) ++failed;
  }
  std::printf("ran %zu records (%d failed)\n", records.size(), failed);
  for (const auto& r : records) {
    if (!r.ok) {
      std::printf("  failed: rate %.3g rep %d %s: %s\n", r.rate, r.rep, to_string(r.method),
                  r.error.c_str());
    }
  }
  std::printf("wrote %s\n", files.records_csv.c_str());
  std::printf("wrote %s\n", files.summary_json.c_str());
  return 0;
}

int run_plot(const std::string& summary_path, const std::string& out_dir) {
  const ExperimentSummary summary = read_summary_json(summary_path);
  const std::vector<std::string> written = emit_boxplot_svg(summary, out_dir);
  for (const auto& path : written) std::printf("wrote %s\n", path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional Bayes factor variable selection with missing data"};
  app.require_subcommand(1);

  // --- select ---------------------------------------------------------
  auto* select_cmd =
      app.add_subcommand("select", "complete-data FBF variable selection on a CSV");
  DataOpts select_opts;
  int select_top = 5;
  add_data_options(select_cmd, &select_opts);
  select_cmd->add_option("--top", select_top, "number of top models to print")
      ->capture_default_str();

  // --- impute-select --------------------------------------------------
  auto* mi_cmd = app.add_subcommand(
      "impute-select", "missing-data selection: impute M times, average the FBF densities");
  DataOpts mi_opts;
  GibbsConfig gibbs;
  gibbs.seed = 1;
  int mi_top = 5;
  add_data_options(mi_cmd, &mi_opts);
  mi_cmd->add_option("--m", gibbs.m, "number of imputations")->capture_default_str();
  mi_cmd->add_option("--burn-in", gibbs.burn_in, "Gibbs burn-in sweeps")
      ->capture_default_str();
  mi_cmd->add_option("--spacing", gibbs.spacing, "Gibbs sweeps between retained imputations")
      ->capture_default_str();
  mi_cmd->add_option("--seed", gibbs.seed, "RNG seed")->capture_default_str();
  mi_cmd->add_option("--top", mi_top, "number of top models to print")->capture_default_str();

  // --- experiment -----------------------------------------------------
  auto* exp_cmd = app.add_subcommand(
      "experiment", "MCAR injection study: oracle vs listwise deletion vs imputation");
  DataOpts exp_opts;
  ExperimentSpec spec;
  std::string out_dir = "results";
  add_data_options(exp_cmd, &exp_opts);
  exp_cmd->add_option("--miss-cols", spec.miss_cols,
                      "predictor columns to corrupt with missing values")
      ->delimiter(',')
      ->required();
  exp_cmd->add_option("--rates", spec.rates, "missingness rates, each in (0,1)")
      ->delimiter(',')
      ->default_str("0.1,0.2,0.3");
  exp_cmd->add_option("--reps", spec.reps, "repetitions per rate")->capture_default_str();
  exp_cmd->add_option("--m", spec.m, "imputations per repetition")->capture_default_str();
  exp_cmd->add_option("--burn-in", spec.burn_in, "Gibbs burn-in sweeps")
      ->capture_default_str();
  exp_cmd->add_option("--spacing", spec.spacing, "Gibbs sweeps between retained imputations")
      ->capture_default_str();
  exp_cmd->add_option("--seed", spec.base_seed, "base RNG seed")->capture_default_str();
  exp_cmd->add_option("--out-dir", out_dir, "directory for records.csv and summary.json")
      ->capture_default_str();

  // --- plot -----------------------------------------------------------
  auto* plot_cmd =
      app.add_subcommand("plot", "render per-rate boxplot SVGs from a summary JSON");
  std::string summary_path;
  std::string plot_dir = "results";
  plot_cmd->add_option("--summary", summary_path, "summary.json written by experiment")
      ->required();
  plot_cmd->add_option("--out-dir", plot_dir, "directory for the SVG files")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // normalize usage errors to the input-error code
  }

  try {
    if (select_cmd->parsed()) return run_select(select_opts, select_top);
    if (mi_cmd->parsed()) return run_impute_select(mi_opts, gibbs, mi_top);
    if (exp_cmd->parsed()) {
      spec.data_path = exp_opts.data_path;
      spec.response = exp_opts.response;
      spec.predictors = exp_opts.predictors;
      if (spec.rates.empty()) spec.rates = {0.1, 0.2, 0.3};
      spec.prior = exp_opts.prior;
      spec.fraction_b = exp_opts.fraction_b;
      spec.threads = exp_opts.threads;
      return run_experiment_cmd(spec, out_dir);
    }
    if (plot_cmd->parsed()) return run_plot(summary_path, plot_dir);
  } catch (const fbfmi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
