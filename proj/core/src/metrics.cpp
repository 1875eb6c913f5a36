#include "egodyn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "egodyn/error.hpp"

namespace egodyn {

MetricsReport compute_metrics(const RoundSeries& series) {
  std::vector<std::vector<NodeId>> rounds;
  rounds.reserve(series.views.size());
  for (const EgoView& v : series.views) rounds.push_back(v.observed_nodes());
  return compute_metrics(rounds);
}

MetricsReport compute_metrics(std::span<const std::vector<NodeId>> rounds) {
  if (rounds.empty()) throw ParameterError("metrics need a non-empty series");

  NodeId max_id = 0;
  for (const auto& nodes : rounds) {
    if (!nodes.empty()) max_id = std::max(max_id, *std::max_element(nodes.begin(), nodes.end()));
  }
  constexpr auto kNever = std::numeric_limits<std::size_t>::max();
  // Per node: the round of its last sighting and the start of its current run.
  std::vector<std::size_t> last_seen(static_cast<std::size_t>(max_id) + 1, kNever);
  std::vector<std::size_t> run_start(last_seen.size(), 0);

  MetricsReport r;
  const std::size_t T = rounds.size();
  std::uint64_t cumulative = 0;
  std::vector<NodeId> previous;
  for (std::size_t t = 0; t < T; ++t) {
    std::vector<NodeId> current = rounds[t];
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());

    std::uint64_t fresh = 0;
    for (NodeId u : current) {
      if (last_seen[u] == kNever) {
        ++fresh;
        run_start[u] = t;
      } else if (last_seen[u] + 1 < t) {
        ++r.absence_durations[t - last_seen[u] - 1];
        ++r.presence_durations[last_seen[u] - run_start[u] + 1];
        run_start[u] = t;
      }
      last_seen[u] = t;
    }
    cumulative += fresh;

    std::uint64_t appeared = 0, disappeared = 0;
    if (t > 0) {
      std::vector<NodeId> diff;
      std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(),
                          std::back_inserter(diff));
      appeared = diff.size();
      diff.clear();
      std::set_difference(previous.begin(), previous.end(), current.begin(), current.end(),
                          std::back_inserter(diff));
      disappeared = diff.size();
    }

    r.nodes_observed.push_back(current.size());
    r.new_nodes.push_back(fresh);
    r.cumulative_distinct.push_back(cumulative);
    r.appeared.push_back(appeared);
    r.disappeared.push_back(disappeared);
    previous = std::move(current);
  }
  // Close every node's final run.
  for (std::size_t u = 0; u < last_seen.size(); ++u) {
    if (last_seen[u] != kNever) ++r.presence_durations[last_seen[u] - run_start[u] + 1];
  }
  return r;
}

Curve parse_curve(std::string_view name) {
  if (name == "nodes_observed") return Curve::NodesObserved;
  if (name == "cumulative_distinct") return Curve::CumulativeDistinct;
  if (name == "appeared") return Curve::Appeared;
  if (name == "disappeared") return Curve::Disappeared;
  throw ParameterError("unknown curve field '" + std::string(name) + "'");
}

std::string_view curve_name(Curve curve) {
  switch (curve) {
    case Curve::NodesObserved: return "nodes_observed";
    case Curve::CumulativeDistinct: return "cumulative_distinct";
    case Curve::Appeared: return "appeared";
    case Curve::Disappeared: return "disappeared";
  }
  return "";
}

std::vector<double> curve_values(const MetricsReport& report, Curve curve) {
  const std::vector<std::uint64_t>* src = nullptr;
  switch (curve) {
    case Curve::NodesObserved: src = &report.nodes_observed; break;
    case Curve::CumulativeDistinct: src = &report.cumulative_distinct; break;
    case Curve::Appeared: src = &report.appeared; break;
    case Curve::Disappeared: src = &report.disappeared; break;
  }
  return std::vector<double>(src->begin(), src->end());
}

std::vector<double> normalize_curve(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  if (out.empty()) return out;
  double scale = out.back();
  if (scale == 0.0) scale = *std::max_element(out.begin(), out.end());
  if (scale == 0.0) return out;
  for (double& x : out) x /= scale;
  return out;
}

CurveDistance curve_distance(std::span<const double> a, std::span<const double> b) {
  const std::size_t L = std::min(a.size(), b.size());
  if (L == 0) throw ParameterError("cannot compare empty curves");
  CurveDistance d;
  d.length = L;
  double sum = 0.0;
  for (std::size_t i = 0; i < L; ++i) {
    const double diff = std::abs(a[i] - b[i]);
    sum += diff;
    d.max_abs_diff = std::max(d.max_abs_diff, diff);
  }
  d.mean_abs_diff = sum / static_cast<double>(L);
  return d;
}

CurveDistance compare_curves(const MetricsReport& a, const MetricsReport& b, Curve curve) {
  auto ca = curve_values(a, curve);
  auto cb = curve_values(b, curve);
  const std::size_t L = std::min(ca.size(), cb.size());
  if (L == 0) throw ParameterError("cannot compare empty reports");
  ca.resize(L);
  cb.resize(L);
  CurveDistance d = curve_distance(normalize_curve(ca), normalize_curve(cb));
  d.curve = curve;
  return d;
}

double mean(std::span<const std::uint64_t> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (auto v : values) sum += static_cast<double>(v);
  return sum / static_cast<double>(values.size());
}

double coefficient_of_variation(std::span<const std::uint64_t> values) {
  const double mu = mean(values);
  if (values.empty() || mu == 0.0) return 0.0;
  double ss = 0.0;
  for (auto v : values) ss += (static_cast<double>(v) - mu) * (static_cast<double>(v) - mu);
  return std::sqrt(ss / static_cast<double>(values.size())) / mu;
}

}  // namespace egodyn
