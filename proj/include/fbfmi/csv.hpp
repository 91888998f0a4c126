#pragma once

#include <string>
#include <vector>

#include "fbfmi/dataset.hpp"

namespace fbfmi {

// Tabular view of a parsed CSV: header names plus string cells, used by the
// ingestion layer and the records round-trip.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// UTF-8, comma-separated, header row required. No quoting rules: cells are
// plain tokens.
CsvTable read_csv(const std::string& path);

// Builds a Dataset from the named columns. Cells must be decimal numerals;
// the literal "NA" or an empty cell marks a missing value. A missing or
// malformed response cell rejects the row with its 1-based file line.
Dataset ingest_csv(const std::string& path, const std::string& response_name,
                   const std::vector<std::string>& predictor_names);

// Predictor selection when none is given: every column except the response,
// in file order.
std::vector<std::string> non_response_columns(const std::string& path,
                                              const std::string& response_name);

}  // namespace fbfmi
