#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbfmi/dataset.hpp"
#include "fbfmi/fbf.hpp"

namespace fbfmi {

enum class Method { kOracle, kListwise, kImputed };

const char* to_string(Method method);
Method method_from_string(const std::string& name);

// Everything one repetition study needs. Seeds for individual jobs are
// derived from base_seed together with the (rate index, repetition) pair, so
// any single record can be reproduced in isolation.
struct ExperimentSpec {
  std::string data_path;
  std::string response;
  std::vector<std::string> predictors;  // empty = every non-response column
  std::vector<std::string> miss_cols;
  std::vector<double> rates;
  int reps = 30;
  int m = 20;
  int burn_in = 200;
  int spacing = 50;
  uint64_t base_seed = 1;
  ModelPrior prior = ModelPrior::kUniform;
  std::optional<double> fraction_b;  // unset = minimal fraction
  int threads = 0;                   // 0 = hardware concurrency
};

struct RunRecord {
  double rate = 0.0;
  int rep = 0;
  Method method = Method::kOracle;
  bool ok = false;
  std::string error;
  Vec inclusion;
  std::vector<double> log_fbf;
  double wall_sec = 0.0;
};

// rate x rep grid; each cell runs the oracle, listwise-deletion, and
// imputation analyses on the same injected mask. A failing method yields a
// failed record for that cell; the rest of the grid proceeds.
std::vector<RunRecord> run_experiment(const ExperimentSpec& spec, const Dataset& data);

// Seed derivation rule shared by the experiment and anyone reproducing a
// single cell. The oracle uses no randomness at all.
uint64_t mcar_seed(uint64_t base_seed, int rate_index, int rep);
uint64_t gibbs_seed(uint64_t base_seed, int rate_index, int rep);

struct SummaryCell {
  double rate = 0.0;
  Method method = Method::kOracle;
  std::string variable;
  int count = 0;
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
};

struct FailureNote {
  double rate = 0.0;
  int rep = 0;
  Method method = Method::kOracle;
  std::string error;
};

struct ExperimentSummary {
  std::vector<std::string> variables;
  std::vector<std::string> miss_cols;
  std::vector<double> rates;
  std::vector<SummaryCell> cells;  // ordered by (rate, method, variable)
  std::vector<FailureNote> failures;
};

// Linear-interpolation (type 7) quantile on a sorted sample.
double quantile_type7(const std::vector<double>& sorted, double prob);

ExperimentSummary summarize(const std::vector<RunRecord>& records,
                            const std::vector<std::string>& variables,
                            const std::vector<std::string>& miss_cols);

// One row per (record, variable): rate, rep, method, variable, inclusion
// probability at 17 significant digits.
void write_records_csv(const std::vector<RunRecord>& records,
                       const std::vector<std::string>& variables, const std::string& path);

// Reads a records CSV back into per-variable rows for the round trip.
struct RecordRow {
  double rate = 0.0;
  int rep = 0;
  Method method = Method::kOracle;
  std::string variable;
  double inclusion_prob = 0.0;
};
std::vector<RecordRow> read_records_csv(const std::string& path);

ExperimentSummary summarize_rows(const std::vector<RecordRow>& rows,
                                 const std::vector<std::string>& variables,
                                 const std::vector<std::string>& miss_cols);

void write_summary_json(const ExperimentSummary& summary, const std::string& path);
ExperimentSummary read_summary_json(const std::string& path);

struct EmittedFiles {
  std::string records_csv;
  std::string summary_json;
};

// Writes records.csv and summary.json under out_dir.
EmittedFiles emit_results(const std::vector<RunRecord>& records,
                          const std::vector<std::string>& variables,
                          const std::vector<std::string>& miss_cols, const std::string& out_dir);

}  // namespace fbfmi
