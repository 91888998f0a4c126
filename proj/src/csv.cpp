#include "fbfmi/csv.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "fbfmi/errors.hpp"

namespace fbfmi {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

bool is_missing(const std::string& cell) { return cell.empty() || cell == "NA"; }

double parse_number(const std::string& cell, int line_no, const std::string& col) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(value))
    fail(ErrorKind::ParseError, "cell '" + cell + "' at line " + std::to_string(line_no) +
                                    ", column '" + col + "' is not a decimal numeral");
  return value;
}

int find_column(const CsvTable& table, const std::string& name) {
  const auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end())
    fail(ErrorKind::UnknownColumn, "no column named '" + name + "' in the header");
  return static_cast<int>(it - table.header.begin());
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "' for reading");

  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::ParseError, "'" + path + "' has no header row");
  table.header = split_line(line);
  if (table.header.empty()) fail(ErrorKind::ParseError, "'" + path + "' has an empty header row");

  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_line(line);
    if (cells.size() != table.header.size())
      fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + " has " +
                                      std::to_string(cells.size()) + " cells, header has " +
                                      std::to_string(table.header.size()));
    table.rows.push_back(std::move(cells));
  }
  if (table.rows.empty()) fail(ErrorKind::ParseError, "'" + path + "' has no data rows");
  return table;
}

Dataset ingest_csv(const std::string& path, const std::string& response_name,
                   const std::vector<std::string>& predictor_names) {
  const CsvTable table = read_csv(path);
  const int response_col = find_column(table, response_name);
  std::vector<int> predictor_cols;
  predictor_cols.reserve(predictor_names.size());
  for (const auto& name : predictor_names) {
    if (name == response_name)
      fail(ErrorKind::InvalidArgument, "'" + name + "' is the response column");
    predictor_cols.push_back(find_column(table, name));
  }
  if (predictor_cols.empty()) fail(ErrorKind::InvalidArgument, "no predictor columns selected");

  const int n = static_cast<int>(table.rows.size());
  const int p = static_cast<int>(predictor_cols.size());
  Vec y(n);
  Mat x(n, p);
  BoolMat mask(n, p);

  for (int i = 0; i < n; ++i) {
    const int line_no = i + 2;  // 1-based file line; the header is line 1
    const auto& row = table.rows[i];
    const std::string& y_cell = row[response_col];
    if (is_missing(y_cell))
      fail(ErrorKind::MissingResponse,
           "response is missing at line " + std::to_string(line_no));
    y(i) = parse_number(y_cell, line_no, response_name);
    for (int j = 0; j < p; ++j) {
      const std::string& cell = row[predictor_cols[j]];
      if (is_missing(cell)) {
        mask(i, j) = false;
        x(i, j) = std::numeric_limits<double>::quiet_NaN();
      } else {
        mask(i, j) = true;
        x(i, j) = parse_number(cell, line_no, predictor_names[j]);
      }
    }
  }
  return Dataset(std::move(y), std::move(x), std::move(mask), predictor_names);
}

std::vector<std::string> non_response_columns(const std::string& path,
                                              const std::string& response_name) {
  const CsvTable table = read_csv(path);
  find_column(table, response_name);
  std::vector<std::string> names;
  for (const auto& col : table.header)
    if (col != response_name) names.push_back(col);
  return names;
}

}  // namespace fbfmi
