#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egodyn/measurement.hpp"

namespace egodyn {

/// Node-level dynamics of a round series.
struct MetricsReport {
  std::vector<std::uint64_t> nodes_observed;
  std::vector<std::uint64_t> new_nodes;  ///< nodes seen for the first time at round t
  std::vector<std::uint64_t> cumulative_distinct;
  std::vector<std::uint64_t> appeared;     ///< |view_t \ view_{t-1}|, 0 at t = 0
  std::vector<std::uint64_t> disappeared;  ///< |view_{t-1} \ view_t|, 0 at t = 0

  /// Maximal runs of consecutive presence: run length -> number of runs.
  std::map<std::uint64_t, std::uint64_t> presence_durations;
  /// Gaps between a disappearance and the next reappearance of the same node.
  /// Absence before a node's first sighting or after its last is not a gap.
  std::map<std::uint64_t, std::uint64_t> absence_durations;

  std::size_t rounds() const noexcept { return nodes_observed.size(); }

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// ParameterError on an empty series.
MetricsReport compute_metrics(const RoundSeries& series);

/// Same statistics over plain per-round node sets.
MetricsReport compute_metrics(std::span<const std::vector<NodeId>> rounds);

enum class Curve { NodesObserved, CumulativeDistinct, Appeared, Disappeared };

/// Accepts nodes_observed, cumulative_distinct, appeared, disappeared.
Curve parse_curve(std::string_view name);
std::string_view curve_name(Curve curve);

std::vector<double> curve_values(const MetricsReport& report, Curve curve);

struct CurveDistance {
  Curve curve = Curve::CumulativeDistinct;
  std::size_t length = 0;
  double mean_abs_diff = 0.0;
  double max_abs_diff = 0.0;
};

/// Both curves truncated to the shorter length L and scaled by their own value
/// at L-1 (by their maximum when that is zero; left as-is when all zero).
std::vector<double> normalize_curve(std::span<const double> values);

/// Mean and max absolute difference of two already-normalized curves of equal length.
CurveDistance curve_distance(std::span<const double> a, std::span<const double> b);

/// Normalizes and compares `curve` of two reports. ParameterError if L = 0.
CurveDistance compare_curves(const MetricsReport& a, const MetricsReport& b, Curve curve);

/// Helpers for the qualitative checks.
double mean(std::span<const std::uint64_t> values);
double coefficient_of_variation(std::span<const std::uint64_t> values);

}  // namespace egodyn
