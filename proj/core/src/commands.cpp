#include "egodyn/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "egodyn/config.hpp"
#include "egodyn/error.hpp"
#include "egodyn/ingest.hpp"

namespace egodyn {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::uint64_t parse_count(const std::string& cell, std::size_t line) {
  if (cell.empty() || cell.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, "expected a non-negative integer, got '" + cell + "'");
  }
  return std::stoull(cell);
}

}  // namespace

std::string format_g6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

void write_metrics_csv(std::ostream& out, const MetricsReport& r) {
  out << kMetricsHeader << '\n';
  for (std::size_t t = 0; t < r.rounds(); ++t) {
    out << t << ',' << r.nodes_observed[t] << ',' << r.new_nodes[t] << ',' << r.cumulative_distinct[t] << ','
        << r.appeared[t] << ',' << r.disappeared[t] << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const std::map<std::uint64_t, std::uint64_t>& histogram) {
  out << kHistogramHeader << '\n';
  for (const auto& [duration, count] : histogram) out << duration << ',' << count << '\n';
}

void write_rewires_csv(std::ostream& out, const RoundSeries& series) {
  out << kRewiresHeader << '\n';
  for (const RewireEvent& e : series.rewire_log) {
    out << e.round_index << ',' << e.removed.u << ',' << e.removed.v << ',' << e.added.u << ',' << e.added.v
        << '\n';
  }
}

MetricsReport read_metrics_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing metrics header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kMetricsHeader) throw ParseError(1, "metrics header mismatch");

  MetricsReport r;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw ParseError(line_no, "expected 6 columns");
    if (parse_count(cells[0], line_no) != r.rounds()) throw ParseError(line_no, "rounds must be consecutive from 0");
    r.nodes_observed.push_back(parse_count(cells[1], line_no));
    r.new_nodes.push_back(parse_count(cells[2], line_no));
    r.cumulative_distinct.push_back(parse_count(cells[3], line_no));
    r.appeared.push_back(parse_count(cells[4], line_no));
    r.disappeared.push_back(parse_count(cells[5], line_no));
  }
  return r;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir, std::ostream& err,
                 const TraceOptions& options) {
  ExperimentConfig config;
  try {
    config = load_config(config_path);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  try {
    const RoundSeries series = radar_run(config, {}, options);
    fs::create_directories(out_dir);
    auto rounds = open_output(fs::path(out_dir) / "series.rounds");
    write_series(rounds, series);
    auto rewires = open_output(fs::path(out_dir) / "rewires.csv");
    write_rewires_csv(rewires, series);
    auto echo = open_output(fs::path(out_dir) / "config.echo.json");
    echo << to_json(config);
    if (!rounds || !rewires || !echo) throw std::runtime_error("write failed in " + out_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_analyze(const std::string& series_path, const std::string& out_path, std::ostream& err) {
  ParsedSeries parsed;
  MetricsReport report;
  try {
    parsed = load_series(series_path);
    for (const MalformedRound& bad : parsed.malformed) {
      err << "warning: skipped round " << bad.round_id << " (line " << bad.line << "): " << bad.reason << '\n';
    }
    if (parsed.series.views.empty()) throw ParameterError("no valid rounds in " + series_path);
    report = compute_metrics(parsed.series);
  } catch (const ParseError& e) {
    err << "error: " << series_path << ": " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  try {
    const fs::path out(out_path);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    auto metrics = open_output(out);
    write_metrics_csv(metrics, report);
    auto presence = open_output(out.parent_path() / "presence_hist.csv");
    write_histogram_csv(presence, report.presence_durations);
    auto absence = open_output(out.parent_path() / "absence_hist.csv");
    write_histogram_csv(absence, report.absence_durations);
    if (!metrics || !presence || !absence) throw std::runtime_error("write failed for " + out_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const std::string& field, std::ostream& out,
                std::ostream& err) {
  try {
    const Curve curve = parse_curve(field);
    auto read = [](const std::string& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw ParameterError("cannot open metrics file " + path);
      try {
        return read_metrics_csv(in);
      } catch (const ParseError& e) {
        throw ParameterError(path + ": " + e.what());
      }
    };
    const MetricsReport a = read(path_a);
    const MetricsReport b = read(path_b);
    const CurveDistance d = compare_curves(a, b, curve);
    out << curve_name(curve) << ',' << d.length << ',' << format_g6(d.mean_abs_diff) << ','
        << format_g6(d.max_abs_diff) << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace egodyn
