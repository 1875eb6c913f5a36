#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "egodyn/graph.hpp"
#include "egodyn/random.hpp"

namespace egodyn {

/// Equal-cost shortest-path DAGs toward a fixed destination set.
///
/// For each destination d: hop distance of every node to d, the sorted set of
/// neighbors one hop closer to d, and the fixed (minimum-id) next hop used by
/// nodes that do not balance load. Immutable after construction.
class RoutingState {
 public:
  std::size_t node_count() const noexcept { return node_count_; }

  /// Destinations in the order they were given.
  std::span<const NodeId> destinations() const noexcept { return destinations_; }

  bool routes_to(NodeId d) const noexcept;

  std::uint32_t distance(NodeId d, NodeId u) const;

  /// Neighbors v of u with distance(d, v) == distance(d, u) - 1; empty for u == d.
  std::span<const NodeId> next_hops(NodeId d, NodeId u) const;

  /// Minimum element of next_hops(d, u). Precondition: u != d.
  NodeId fixed_choice(NodeId d, NodeId u) const;

  friend bool operator==(const RoutingState&, const RoutingState&) = default;

 private:
  friend RoutingState compute_routing_state(const Graph& g, std::span<const NodeId> destinations);

  struct Table {
    std::vector<std::uint32_t> dist;
    std::vector<std::uint32_t> offsets;  // CSR index into hops, size n+1
    std::vector<NodeId> hops;

    friend bool operator==(const Table&, const Table&) = default;
  };

  const Table& table(NodeId d) const;

  std::size_t node_count_ = 0;
  std::vector<NodeId> destinations_;
  std::vector<std::int32_t> slot_;  // node id -> index into tables_, -1 if not a destination
  std::vector<Table> tables_;
};

/// One BFS per destination. ParameterError on an empty destination list, an
/// out-of-range id, or a graph in which some node cannot reach a destination.
RoutingState compute_routing_state(const Graph& g, std::span<const NodeId> destinations);

/// Which nodes balance load over their equal-cost next hops.
class LoadBalancerSet {
 public:
  LoadBalancerSet() = default;

  /// Explicit flags (fixtures, hand-built scenarios).
  explicit LoadBalancerSet(std::vector<bool> flags, double fraction = 0.0, std::uint64_t seed = 0)
      : flags_(std::move(flags)), fraction_(fraction), seed_(seed) {}

  std::size_t node_count() const noexcept { return flags_.size(); }
  bool is_balancer(NodeId u) const { return u < flags_.size() && flags_[u]; }
  std::size_t count() const noexcept;
  double fraction() const noexcept { return fraction_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::vector<bool> flags_;
  double fraction_ = 0.0;
  std::uint64_t seed_ = 0;
};

/// Independent Bernoulli(p) flag per node from `seed`. ParameterError unless 0 <= p <= 1.
LoadBalancerSet designate_load_balancers(std::size_t n, double p, std::uint64_t seed);

/// Node sequence from monitor to destination.
struct Route {
  std::vector<NodeId> nodes;

  friend bool operator==(const Route&, const Route&) = default;
};

/// Walk from monitor toward destination; balancers draw a uniform next hop
/// from `rng`, others take the fixed choice. The route always has
/// distance(destination, monitor) hops.
Route trace_route(const RoutingState& state, const LoadBalancerSet& lbs, NodeId monitor, NodeId destination,
                  RandomStream& rng);

}  // namespace egodyn
