#include "fbfmi/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fbfmi/errors.hpp"

namespace fbfmi {

namespace {

// Figure-1 palette: listwise deletion green, imputed blue, oracle red.
constexpr const char* kListwiseColor = "#2ca02c";
constexpr const char* kImputedColor = "#1f77b4";
constexpr const char* kOracleColor = "#d62728";

constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 64.0;
constexpr double kGroupWidth = 72.0;
constexpr double kPlotHeight = 300.0;
constexpr double kBoxWidth = 22.0;
constexpr double kOracleHalf = 5.0;  // half side of the oracle square

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Inclusion probabilities live in [0, 1]; map that range onto the plot area.
double y_pixel(double prob) {
  return kMarginTop + (1.0 - prob) * kPlotHeight;
}

const SummaryCell* find_cell(const ExperimentSummary& summary, double rate, Method method,
                             const std::string& variable) {
  for (const auto& cell : summary.cells) {
    if (cell.rate == rate && cell.method == method && cell.variable == variable &&
        cell.count > 0) {
      return &cell;
    }
  }
  return nullptr;
}

void draw_box(std::ostream& os, const SummaryCell& cell, double cx, const char* color) {
  const double half = kBoxWidth / 2.0;
  // Whiskers first so the box overdraws their interior ends.
  os << "  <line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(y_pixel(cell.min)) << "\" x2=\""
     << fmt(cx) << "\" y2=\"" << fmt(y_pixel(cell.q1)) << "\" stroke=\"" << color
     << "\" stroke-width=\"1\"/>\n";
  os << "  <line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(y_pixel(cell.q3)) << "\" x2=\""
     << fmt(cx) << "\" y2=\"" << fmt(y_pixel(cell.max)) << "\" stroke=\"" << color
     << "\" stroke-width=\"1\"/>\n";
  for (double cap : {cell.min, cell.max}) {
    os << "  <line x1=\"" << fmt(cx - half / 2.0) << "\" y1=\"" << fmt(y_pixel(cap))
       << "\" x2=\"" << fmt(cx + half / 2.0) << "\" y2=\"" << fmt(y_pixel(cap))
       << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
  }
  // Interquartile box. Q1 maps below Q3 on screen, so the rect starts at Q3.
  os << "  <rect x=\"" << fmt(cx - half) << "\" y=\"" << fmt(y_pixel(cell.q3)) << "\" width=\""
     << fmt(kBoxWidth) << "\" height=\"" << fmt(y_pixel(cell.q1) - y_pixel(cell.q3))
     << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color
     << "\" stroke-width=\"1.5\"/>\n";
  os << "  <line x1=\"" << fmt(cx - half) << "\" y1=\"" << fmt(y_pixel(cell.median))
     << "\" x2=\"" << fmt(cx + half) << "\" y2=\"" << fmt(y_pixel(cell.median))
     << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
}

void render_rate(std::ostream& os, const ExperimentSummary& summary, double rate) {
  const auto& vars = summary.variables;
  const double width = kMarginLeft + kGroupWidth * static_cast<double>(vars.size()) +
                       kMarginRight;
  const double height = kMarginTop + kPlotHeight + kMarginBottom;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" fill=\"white\"/>\n";
  os << "  <text x=\"" << fmt(width / 2.0)
     << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
     << "missingness rate " << xml_escape(fmt(rate)) << "</text>\n";

  // y axis with a tick every 0.25 of inclusion probability.
  os << "  <line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(y_pixel(1.0)) << "\" x2=\""
     << fmt(kMarginLeft) << "\" y2=\"" << fmt(y_pixel(0.0))
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double p = 0.25 * i;
    os << "  <line x1=\"" << fmt(kMarginLeft - 5.0) << "\" y1=\"" << fmt(y_pixel(p))
       << "\" x2=\"" << fmt(kMarginLeft) << "\" y2=\"" << fmt(y_pixel(p))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "  <text x=\"" << fmt(kMarginLeft - 9.0) << "\" y=\"" << fmt(y_pixel(p) + 4.0)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(p)
       << "</text>\n";
  }
  os << "  <text x=\"16\" y=\"" << fmt(kMarginTop + kPlotHeight / 2.0)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\""
     << "rotate(-90 16 " << fmt(kMarginTop + kPlotHeight / 2.0)
     << ")\">inclusion probability</text>\n";
  os << "  <line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(y_pixel(0.0)) << "\" x2=\""
     << fmt(kMarginLeft + kGroupWidth * static_cast<double>(vars.size())) << "\" y2=\""
     << fmt(y_pixel(0.0)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (std::size_t v = 0; v < vars.size(); ++v) {
    const double gx = kMarginLeft + kGroupWidth * static_cast<double>(v);
    const double center = gx + kGroupWidth / 2.0;

    // A method whose cell is absent (every repetition failed) is simply not
    // drawn; the remaining groups keep their positions.
    if (const SummaryCell* cell = find_cell(summary, rate, Method::kListwise, vars[v])) {
      draw_box(os, *cell, center - kBoxWidth * 0.75, kListwiseColor);
    }
    if (const SummaryCell* cell = find_cell(summary, rate, Method::kImputed, vars[v])) {
      draw_box(os, *cell, center + kBoxWidth * 0.75, kImputedColor);
    }
    if (const SummaryCell* cell = find_cell(summary, rate, Method::kOracle, vars[v])) {
      // The oracle run is deterministic, so its five-number summary collapses
      // to a point; mark it with the square from the figure.
      os << "  <rect x=\"" << fmt(center - kOracleHalf) << "\" y=\""
         << fmt(y_pixel(cell->median) - kOracleHalf) << "\" width=\"" << fmt(2.0 * kOracleHalf)
         << "\" height=\"" << fmt(2.0 * kOracleHalf) << "\" fill=\"" << kOracleColor
         << "\"/>\n";
    }

    const bool corrupted = std::find(summary.miss_cols.begin(), summary.miss_cols.end(),
                                     vars[v]) != summary.miss_cols.end();
    const std::string label = corrupted ? vars[v] + "*" : vars[v];
    os << "  <text x=\"" << fmt(center) << "\" y=\"" << fmt(y_pixel(0.0) + 20.0)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
       << xml_escape(label) << "</text>\n";
  }

  // Legend under the axis labels; a method with no surviving records at
  // this rate gets no entry, mirroring its missing boxes.
  const auto rate_has = [&](Method method) {
    for (const auto& name : vars)
      if (find_cell(summary, rate, method, name) != nullptr) return true;
    return false;
  };
  double lx = kMarginLeft;
  const double ly = height - 16.0;
  const auto legend_entry = [&](const char* color, const char* label, double advance) {
    os << "  <rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly - 9.0)
       << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
    os << "  <text x=\"" << fmt(lx + 15.0) << "\" y=\"" << fmt(ly)
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << label << "</text>\n";
    lx += advance;
  };
  if (rate_has(Method::kListwise)) legend_entry(kListwiseColor, "listwise deletion", 125.0);
  if (rate_has(Method::kImputed)) legend_entry(kImputedColor, "imputed", 80.0);
  if (rate_has(Method::kOracle)) legend_entry(kOracleColor, "oracle (complete data)", 160.0);

  os << "</svg>\n";
}

}  // namespace

std::vector<std::string> emit_boxplot_svg(const ExperimentSummary& summary,
                                          const std::string& out_dir) {
  if (summary.variables.empty() || summary.rates.empty()) {
    fail(ErrorKind::InvalidArgument, "emit_boxplot_svg: summary has no variables or no rates");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    fail(ErrorKind::Io, "cannot create output directory '" + out_dir + "': " + ec.message());
  }

  std::vector<std::string> written;
  for (double rate : summary.rates) {
    char name[64];
    std::snprintf(name, sizeof(name), "boxplot_rate_%g.svg", rate);
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    std::ostringstream body;
    render_rate(body, summary, rate);
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
    }
    os << body.str();
    if (!os.flush()) {
      fail(ErrorKind::Io, "write to '" + path + "' failed");
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace fbfmi
