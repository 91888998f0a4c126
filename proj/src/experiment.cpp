#include "fbfmi/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "fbfmi/errors.hpp"
#include "fbfmi/impute.hpp"
#include "fbfmi/mcar.hpp"
#include "fbfmi/mifbf.hpp"
#include "fbfmi/parallel.hpp"
#include "fbfmi/rng.hpp"

namespace fbfmi {

namespace {

using nlohmann::json;

std::string format_g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

constexpr int kMethodOrder[] = {0, 1, 2};  // oracle, listwise, imputed

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::kOracle: return "oracle";
    case Method::kListwise: return "listwise";
    case Method::kImputed: return "imputed";
  }
  return "unknown";
}

Method method_from_string(const std::string& name) {
  if (name == "oracle") return Method::kOracle;
  if (name == "listwise") return Method::kListwise;
  if (name == "imputed") return Method::kImputed;
  fail(ErrorKind::ParseError, "unknown method '" + name + "'");
}

uint64_t mcar_seed(uint64_t base_seed, int rate_index, int rep) {
  return derive_seed(base_seed, /*tag=*/1, static_cast<uint64_t>(rate_index),
                     static_cast<uint64_t>(rep));
}

uint64_t gibbs_seed(uint64_t base_seed, int rate_index, int rep) {
  return derive_seed(base_seed, /*tag=*/2, static_cast<uint64_t>(rate_index),
                     static_cast<uint64_t>(rep));
}

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec, const Dataset& data) {
  if (spec.rates.empty()) fail(ErrorKind::InvalidArgument, "no missingness rates given");
  for (double rate : spec.rates)
    if (!(rate > 0.0 && rate < 1.0))
      fail(ErrorKind::InvalidArgument, "rates must lie strictly in (0, 1)");
  if (spec.reps < 1) fail(ErrorKind::InvalidArgument, "need at least one repetition");
  if (!data.fully_observed())
    fail(ErrorKind::AlreadyMissing,
         "the experiment needs a complete dataset; the oracle analysis is its ground truth");
  for (const auto& name : spec.miss_cols)
    if (std::find(data.names.begin(), data.names.end(), name) == data.names.end())
      fail(ErrorKind::UnknownColumn, "missingness column '" + name + "' is not a predictor");
  if (spec.miss_cols.empty()) fail(ErrorKind::InvalidArgument, "no columns marked for corruption");

  SelectOptions select_opts;
  select_opts.prior = spec.prior;
  select_opts.fraction_b = spec.fraction_b;

  // The oracle sees the intact data and uses no randomness: one analysis
  // serves every (rate, rep) cell.
  RunRecord oracle_template;
  oracle_template.method = Method::kOracle;
  {
    const double t0 = now_seconds();
    SelectionResult oracle = select_complete(data.x, data.y, select_opts);
    oracle_template.wall_sec = now_seconds() - t0;
    oracle_template.ok = true;
    oracle_template.inclusion = std::move(oracle.inclusion);
    oracle_template.log_fbf = std::move(oracle.log_fbf);
  }

  const int n_rates = static_cast<int>(spec.rates.size());
  const int n_jobs = n_rates * spec.reps;
  std::vector<RunRecord> records(static_cast<size_t>(n_jobs) * 3);

  parallel_for(n_jobs, spec.threads, [&](int job) {
    const int rate_index = job / spec.reps;
    const int rep = job % spec.reps;
    const double rate = spec.rates[rate_index];
    RunRecord* slot = &records[static_cast<size_t>(job) * 3];

    slot[0] = oracle_template;
    slot[0].rate = rate;
    slot[0].rep = rep;

    Dataset corrupted = inject_mcar(data, spec.miss_cols, rate, mcar_seed(spec.base_seed, rate_index, rep));

    RunRecord& listwise = slot[1];
    listwise.rate = rate;
    listwise.rep = rep;
    listwise.method = Method::kListwise;
    try {
      const double t0 = now_seconds();
      const CompleteData survivors = listwise_delete(corrupted);
      SelectionResult result = select_complete(survivors.x, survivors.y, select_opts);
      listwise.wall_sec = now_seconds() - t0;
      listwise.ok = true;
      listwise.inclusion = std::move(result.inclusion);
      listwise.log_fbf = std::move(result.log_fbf);
    } catch (const std::exception& e) {
      listwise.ok = false;
      listwise.error = e.what();
    }

    RunRecord& imputed = slot[2];
    imputed.rate = rate;
    imputed.rep = rep;
    imputed.method = Method::kImputed;
    try {
      const double t0 = now_seconds();
      GibbsConfig gibbs;
      gibbs.burn_in = spec.burn_in;
      gibbs.spacing = spec.spacing;
      gibbs.m = spec.m;
      gibbs.seed = gibbs_seed(spec.base_seed, rate_index, rep);
      const ImputationSet imps = impute(corrupted, gibbs);
      SelectionResult result = select_mi(imps, select_opts);
      imputed.wall_sec = now_seconds() - t0;
      imputed.ok = true;
      imputed.inclusion = std::move(result.inclusion);
      imputed.log_fbf = std::move(result.log_fbf);
    } catch (const std::exception& e) {
      imputed.ok = false;
      imputed.error = e.what();
    }
  });

  return records;
}

double quantile_type7(const std::vector<double>& sorted, double prob) {
  if (sorted.empty()) fail(ErrorKind::InvalidArgument, "quantile of an empty sample");
  if (sorted.size() == 1) return sorted[0];
  const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
  const auto lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

namespace {

ExperimentSummary summarize_samples(
    const std::map<std::tuple<double, int, std::string>, std::vector<double>>& samples,
    const std::vector<std::string>& variables, const std::vector<std::string>& miss_cols,
    std::vector<FailureNote> failures) {
  ExperimentSummary summary;
  summary.variables = variables;
  summary.miss_cols = miss_cols;
  for (const auto& [key, _] : samples) {
    const double rate = std::get<0>(key);
    if (summary.rates.empty() || summary.rates.back() != rate) summary.rates.push_back(rate);
  }
  std::sort(summary.rates.begin(), summary.rates.end());
  summary.rates.erase(std::unique(summary.rates.begin(), summary.rates.end()),
                      summary.rates.end());

  for (double rate : summary.rates) {
    for (int method : kMethodOrder) {
      for (const auto& variable : variables) {
        const auto it = samples.find({rate, method, variable});
        if (it == samples.end() || it->second.empty()) continue;
        std::vector<double> values = it->second;
        std::sort(values.begin(), values.end());
        SummaryCell cell;
        cell.rate = rate;
        cell.method = static_cast<Method>(method);
        cell.variable = variable;
        cell.count = static_cast<int>(values.size());
        cell.min = values.front();
        cell.q1 = quantile_type7(values, 0.25);
        cell.median = quantile_type7(values, 0.5);
        cell.q3 = quantile_type7(values, 0.75);
        cell.max = values.back();
        summary.cells.push_back(std::move(cell));
      }
    }
  }
  summary.failures = std::move(failures);
  return summary;
}

}  // namespace

ExperimentSummary summarize(const std::vector<RunRecord>& records,
                            const std::vector<std::string>& variables,
                            const std::vector<std::string>& miss_cols) {
  std::map<std::tuple<double, int, std::string>, std::vector<double>> samples;
  std::vector<FailureNote> failures;
  for (const auto& record : records) {
    if (!record.ok) {
      failures.push_back({record.rate, record.rep, record.method, record.error});
      continue;
    }
    for (size_t j = 0; j < variables.size(); ++j)
      samples[{record.rate, static_cast<int>(record.method), variables[j]}].push_back(
          record.inclusion(static_cast<Eigen::Index>(j)));
  }
  return summarize_samples(samples, variables, miss_cols, std::move(failures));
}

ExperimentSummary summarize_rows(const std::vector<RecordRow>& rows,
                                 const std::vector<std::string>& variables,
                                 const std::vector<std::string>& miss_cols) {
  std::map<std::tuple<double, int, std::string>, std::vector<double>> samples;
  for (const auto& row : rows)
    samples[{row.rate, static_cast<int>(row.method), row.variable}].push_back(row.inclusion_prob);
  return summarize_samples(samples, variables, miss_cols, {});
}

void write_records_csv(const std::vector<RunRecord>& records,
                       const std::vector<std::string>& variables, const std::string& path) {
  if (records.empty()) fail(ErrorKind::InvalidArgument, "no records to write");
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");

  std::vector<const RunRecord*> ordered;
  ordered.reserve(records.size());
  for (const auto& record : records) ordered.push_back(&record);
  std::stable_sort(ordered.begin(), ordered.end(), [](const RunRecord* a, const RunRecord* b) {
    return std::tie(a->rate, a->rep, a->method) < std::tie(b->rate, b->rep, b->method);
  });

  out << "rate,rep,method,variable,inclusion_prob\n";
  for (const RunRecord* record : ordered) {
    if (!record->ok) continue;
    for (size_t j = 0; j < variables.size(); ++j) {
      out << format_g17(record->rate) << ',' << record->rep << ',' << to_string(record->method)
          << ',' << variables[j] << ','
          << format_g17(record->inclusion(static_cast<Eigen::Index>(j))) << '\n';
    }
  }
  if (!out) fail(ErrorKind::Io, "failed writing '" + path + "'");
}

std::vector<RecordRow> read_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line) || line != "rate,rep,method,variable,inclusion_prob")
    fail(ErrorKind::ParseError, "'" + path + "' is not a records CSV");

  std::vector<RecordRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string rate_s, rep_s, method_s, variable, incl_s;
    if (!std::getline(ss, rate_s, ',') || !std::getline(ss, rep_s, ',') ||
        !std::getline(ss, method_s, ',') || !std::getline(ss, variable, ',') ||
        !std::getline(ss, incl_s))
      fail(ErrorKind::ParseError, "malformed record at line " + std::to_string(line_no));
    RecordRow row;
    row.rate = std::stod(rate_s);
    row.rep = std::stoi(rep_s);
    row.method = method_from_string(method_s);
    row.variable = variable;
    row.inclusion_prob = std::stod(incl_s);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_summary_json(const ExperimentSummary& summary, const std::string& path) {
  json doc;
  doc["schema"] = "fbfmi-summary-v1";
  doc["variables"] = summary.variables;
  doc["miss_cols"] = summary.miss_cols;
  doc["rates"] = summary.rates;
  doc["statistics"] = {"min", "q1", "median", "q3", "max"};
  json cells = json::array();
  for (const auto& cell : summary.cells) {
    cells.push_back({{"rate", cell.rate},
                     {"method", to_string(cell.method)},
                     {"variable", cell.variable},
                     {"count", cell.count},
                     {"min", cell.min},
                     {"q1", cell.q1},
                     {"median", cell.median},
                     {"q3", cell.q3},
                     {"max", cell.max}});
  }
  doc["cells"] = std::move(cells);
  json failures = json::array();
  for (const auto& failure : summary.failures) {
    failures.push_back({{"rate", failure.rate},
                        {"rep", failure.rep},
                        {"method", to_string(failure.method)},
                        {"error", failure.error}});
  }
  doc["failures"] = std::move(failures);

  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << doc.dump(2) << '\n';
  if (!out) fail(ErrorKind::Io, "failed writing '" + path + "'");
}

ExperimentSummary read_summary_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "' for reading");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, "'" + path + "' is not valid JSON: " + e.what());
  }

  ExperimentSummary summary;
  try {
    summary.variables = doc.at("variables").get<std::vector<std::string>>();
    summary.miss_cols = doc.at("miss_cols").get<std::vector<std::string>>();
    summary.rates = doc.at("rates").get<std::vector<double>>();
    for (const auto& cell : doc.at("cells")) {
      SummaryCell c;
      c.rate = cell.at("rate").get<double>();
      c.method = method_from_string(cell.at("method").get<std::string>());
      c.variable = cell.at("variable").get<std::string>();
      c.count = cell.at("count").get<int>();
      c.min = cell.at("min").get<double>();
      c.q1 = cell.at("q1").get<double>();
      c.median = cell.at("median").get<double>();
      c.q3 = cell.at("q3").get<double>();
      c.max = cell.at("max").get<double>();
      summary.cells.push_back(std::move(c));
    }
    if (doc.contains("failures")) {
      for (const auto& failure : doc.at("failures")) {
        FailureNote note;
        note.rate = failure.at("rate").get<double>();
        note.rep = failure.at("rep").get<int>();
        note.method = method_from_string(failure.at("method").get<std::string>());
        note.error = failure.at("error").get<std::string>();
        summary.failures.push_back(std::move(note));
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, "'" + path + "' does not match the summary schema: " + e.what());
  }
  return summary;
}

EmittedFiles emit_results(const std::vector<RunRecord>& records,
                          const std::vector<std::string>& variables,
                          const std::vector<std::string>& miss_cols, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create directory '" + out_dir + "': " + ec.message());

  EmittedFiles files;
  files.records_csv = (std::filesystem::path(out_dir) / "records.csv").string();
  files.summary_json = (std::filesystem::path(out_dir) / "summary.json").string();
  write_records_csv(records, variables, files.records_csv);
  write_summary_json(summarize(records, variables, miss_cols), files.summary_json);
  return files;
}

}  // namespace fbfmi
