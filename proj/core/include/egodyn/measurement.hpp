#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "egodyn/config.hpp"
#include "egodyn/graph.hpp"
#include "egodyn/labels.hpp"
#include "egodyn/routing.hpp"
#include "egodyn/topology.hpp"

namespace egodyn {

/// One round's measured tree, rooted at the monitor.
struct EgoView {
  std::size_t round_index = 0;
  std::int64_t round_id = 0;     ///< original round id (== round_index for simulations)
  std::int64_t timestamp_s = 0;  ///< seconds since epoch, or since start for simulations
  NodeId monitor = 0;
  std::map<NodeId, NodeId> parent;  ///< child -> parent; the monitor has no entry

  bool contains(NodeId u) const { return u == monitor || parent.contains(u); }
  std::size_t node_count() const noexcept { return parent.size() + 1; }

  /// Monitor plus every child, ascending.
  std::vector<NodeId> observed_nodes() const;

  /// (parent, child) pairs, ascending.
  std::vector<std::pair<NodeId, NodeId>> observed_edges() const;

  friend bool operator==(const EgoView&, const EgoView&) = default;
};

/// Checks the tree invariant: every parent chain ends at the monitor without
/// revisiting a node. Returns a reason string on failure, naming nodes with
/// `name` (decimal ids when empty).
std::optional<std::string> tree_violation(const EgoView& view,
                                          const std::function<std::string(NodeId)>& name = {});

/// Ordered rounds from one monitor to a fixed destination set.
struct RoundSeries {
  NodeId monitor = 0;
  std::vector<NodeId> destinations;  ///< ascending; empty for ingested archives
  std::int64_t round_period_s = 900;
  std::optional<ExperimentConfig> config;
  std::vector<RewireEvent> rewire_log;
  std::vector<EgoView> views;
  /// Labels for ingested data. Empty for simulations, whose labels are decimal node ids.
  LabelTable labels;

  std::string label(NodeId id) const { return labels.empty() ? std::to_string(id) : labels.label(id); }
};

struct TraceOptions {
  /// Worker threads used to trace routes within a round. Each destination has
  /// its own random substream and grafting is serial, so the result does not
  /// depend on this value.
  unsigned threads = 1;
};

/// One tracetree measurement on a fixed graph.
///
/// Destinations are processed in ascending id order. Each route is traced in
/// full with the substream derive_seed(round_seed, "trace", destination), then
/// scanned backward to the last node already in the tree; only the suffix after
/// it is grafted.
EgoView tracetree_round(const Graph& g, const RoutingState& state, const LoadBalancerSet& lbs, NodeId monitor,
                        std::span<const NodeId> destinations, std::uint64_t round_seed, std::size_t round_index,
                        const TraceOptions& options = {});

/// Called once per round with the graph that round was measured on.
using RoundObserver = std::function<void(std::size_t round_index, const Graph& g, const EgoView& view)>;

/// Radar loop on an explicit starting graph. Before every round t > 0,
/// `rewires_per_round` rewire steps are applied and routing is recomputed.
RoundSeries simulate_rounds(Graph graph, const LoadBalancerSet& lbs, NodeId monitor,
                            std::vector<NodeId> destinations, std::size_t rounds, std::size_t rewires_per_round,
                            std::uint64_t seed, std::int64_t round_period_s = 900, const RoundObserver& observer = {},
                            const TraceOptions& options = {});

/// Full experiment from a config: graph, balancers, monitor and destinations
/// are all derived from config.seed. Failures surface as SimulationError.
RoundSeries radar_run(const ExperimentConfig& config, const RoundObserver& observer = {},
                      const TraceOptions& options = {});

}  // namespace egodyn
