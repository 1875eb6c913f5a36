#include "egodyn/routing.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "egodyn/error.hpp"

namespace egodyn {

namespace {
constexpr auto kUnreachable = std::numeric_limits<std::uint32_t>::max();
}

bool RoutingState::routes_to(NodeId d) const noexcept { return d < slot_.size() && slot_[d] >= 0; }

const RoutingState::Table& RoutingState::table(NodeId d) const {
  if (!routes_to(d)) throw ParameterError("node " + std::to_string(d) + " is not a routed destination");
  return tables_[static_cast<std::size_t>(slot_[d])];
}

std::uint32_t RoutingState::distance(NodeId d, NodeId u) const { return table(d).dist.at(u); }

std::span<const NodeId> RoutingState::next_hops(NodeId d, NodeId u) const {
  const Table& t = table(d);
  if (u >= node_count_) throw ParameterError("node " + std::to_string(u) + " out of range");
  return std::span<const NodeId>(t.hops).subspan(t.offsets[u], t.offsets[u + 1] - t.offsets[u]);
}

NodeId RoutingState::fixed_choice(NodeId d, NodeId u) const {
  const auto hops = next_hops(d, u);
  if (hops.empty()) throw ParameterError("destination has no next hop");
  return hops.front();
}

RoutingState compute_routing_state(const Graph& g, std::span<const NodeId> destinations) {
  if (destinations.empty()) throw ParameterError("routing needs at least one destination");
  const std::size_t n = g.node_count();

  RoutingState state;
  state.node_count_ = n;
  state.destinations_.assign(destinations.begin(), destinations.end());
  state.slot_.assign(n, -1);
  for (NodeId d : destinations) {
    if (d >= n) throw ParameterError("destination " + std::to_string(d) + " out of range");
    if (state.slot_[d] >= 0) continue;
    state.slot_[d] = static_cast<std::int32_t>(state.tables_.size());

    RoutingState::Table t;
    t.dist = bfs_distances(g, d);
    if (std::find(t.dist.begin(), t.dist.end(), kUnreachable) != t.dist.end()) {
      throw ParameterError("graph is not connected: some node cannot reach " + std::to_string(d));
    }
    // Adjacency is sorted, so each next-hop list comes out sorted.
    t.offsets.resize(n + 1, 0);
    for (NodeId u = 0; u < n; ++u) {
      t.offsets[u] = static_cast<std::uint32_t>(t.hops.size());
      if (u == d) continue;
      for (NodeId w : g.neighbors(u)) {
        if (t.dist[w] + 1 == t.dist[u]) t.hops.push_back(w);
      }
    }
    t.offsets[n] = static_cast<std::uint32_t>(t.hops.size());
    state.tables_.push_back(std::move(t));
  }
  return state;
}

std::size_t LoadBalancerSet::count() const noexcept {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), true));
}

LoadBalancerSet designate_load_balancers(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("load-balancer fraction must lie in [0, 1]");
  RandomStream rng(seed);
  std::vector<bool> flags(n);
  for (std::size_t u = 0; u < n; ++u) flags[u] = rng.bernoulli(p);
  return LoadBalancerSet(std::move(flags), p, seed);
}

Route trace_route(const RoutingState& state, const LoadBalancerSet& lbs, NodeId monitor, NodeId destination,
                  RandomStream& rng) {
  if (monitor == destination) throw ParameterError("monitor and destination must differ");
  if (monitor >= state.node_count()) throw ParameterError("monitor " + std::to_string(monitor) + " out of range");

  Route route;
  route.nodes.reserve(state.distance(destination, monitor) + 1);
  NodeId u = monitor;
  route.nodes.push_back(u);
  while (u != destination) {
    const auto hops = state.next_hops(destination, u);
    if (lbs.is_balancer(u) && hops.size() > 1) {
      u = hops[rng.index(hops.size())];
    } else {
      u = hops.front();
    }
    route.nodes.push_back(u);
  }
  return route;
}

}  // namespace egodyn
