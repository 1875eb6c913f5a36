#pragma once

#include <iosfwd>
#include <string>

#include "egodyn/measurement.hpp"
#include "egodyn/metrics.hpp"

namespace egodyn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;

inline constexpr const char* kMetricsHeader = "round,nodes_observed,new_nodes,cumulative_distinct,appeared,disappeared";
inline constexpr const char* kHistogramHeader = "duration,count";
inline constexpr const char* kRewiresHeader = "round,removed_u,removed_v,added_u,added_v";

/// Printf-style %.6g, independent of the global C++ locale.
std::string format_g6(double value);

void write_metrics_csv(std::ostream& out, const MetricsReport& report);
void write_histogram_csv(std::ostream& out, const std::map<std::uint64_t, std::uint64_t>& histogram);
void write_rewires_csv(std::ostream& out, const RoundSeries& series);

/// Reads the per-round curves of a metrics CSV (histograms are left empty).
/// ParseError on a header mismatch or malformed row.
MetricsReport read_metrics_csv(std::istream& in);

/// simulate: writes series.rounds, rewires.csv and config.echo.json into out_dir.
int cmd_simulate(const std::string& config_path, const std::string& out_dir, std::ostream& err,
                 const TraceOptions& options = {});

/// analyze: writes the metrics CSV at out_path plus presence_hist.csv and
/// absence_hist.csv in the same directory.
int cmd_analyze(const std::string& series_path, const std::string& out_path, std::ostream& err);

/// compare: prints "field,length,mean_abs_diff,max_abs_diff" values on `out`.
int cmd_compare(const std::string& path_a, const std::string& path_b, const std::string& field, std::ostream& out,
                std::ostream& err);

}  // namespace egodyn
