#include "egodyn/measurement.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "egodyn/error.hpp"
#include "egodyn/random.hpp"

namespace egodyn {

std::vector<NodeId> EgoView::observed_nodes() const {
  std::vector<NodeId> nodes;
  nodes.reserve(node_count());
  nodes.push_back(monitor);
  for (const auto& [child, _] : parent) nodes.push_back(child);
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<std::pair<NodeId, NodeId>> EgoView::observed_edges() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(parent.size());
  for (const auto& [child, par] : parent) edges.emplace_back(par, child);
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::optional<std::string> tree_violation(const EgoView& view, const std::function<std::string(NodeId)>& name) {
  auto label = [&name](NodeId u) { return name ? name(u) : std::to_string(u); };
  if (view.parent.contains(view.monitor)) return "monitor " + label(view.monitor) + " has a parent";
  for (const auto& [child, _] : view.parent) {
    std::set<NodeId> seen{child};
    NodeId u = child;
    while (u != view.monitor) {
      auto it = view.parent.find(u);
      if (it == view.parent.end()) return "node " + label(u) + " is not connected to the monitor";
      u = it->second;
      if (!seen.insert(u).second) return "cycle through " + label(u);
    }
  }
  return std::nullopt;
}

EgoView tracetree_round(const Graph& g, const RoutingState& state, const LoadBalancerSet& lbs, NodeId monitor,
                        std::span<const NodeId> destinations, std::uint64_t round_seed, std::size_t round_index,
                        const TraceOptions& options) {
  if (destinations.empty()) throw ParameterError("tracetree needs at least one destination");
  if (state.node_count() != g.node_count()) throw ParameterError("routing state was computed on another graph");
  if (monitor >= g.node_count()) throw ParameterError("monitor out of range");

  std::vector<NodeId> order(destinations.begin(), destinations.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (NodeId d : order) {
    if (d == monitor) throw ParameterError("destination equals the monitor");
    if (!state.routes_to(d)) throw ParameterError("no routing state for destination " + std::to_string(d));
  }

  std::vector<Route> routes(order.size());
  auto trace_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RandomStream rng(derive_seed(round_seed, "trace", order[i]));
      routes[i] = trace_route(state, lbs, monitor, order[i], rng);
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(1u, options.threads), order.size());
  if (workers <= 1) {
    trace_range(0, order.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (order.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < order.size(); begin += chunk) {
      pool.emplace_back(trace_range, begin, std::min(order.size(), begin + chunk));
    }
  }

  EgoView view;
  view.round_index = round_index;
  view.round_id = static_cast<std::int64_t>(round_index);
  view.monitor = monitor;
  for (const Route& route : routes) {
    const auto& path = route.nodes;
    std::size_t j = path.size() - 1;
    while (!view.contains(path[j])) --j;  // path[0] is the monitor
    for (std::size_t i = j + 1; i < path.size(); ++i) view.parent.emplace(path[i], path[i - 1]);
  }
  return view;
}

RoundSeries simulate_rounds(Graph graph, const LoadBalancerSet& lbs, NodeId monitor,
                            std::vector<NodeId> destinations, std::size_t rounds, std::size_t rewires_per_round,
                            std::uint64_t seed, std::int64_t round_period_s, const RoundObserver& observer,
                            const TraceOptions& options) {
  if (rounds == 0) throw ParameterError("need at least one round");
  std::sort(destinations.begin(), destinations.end());

  RoundSeries series;
  series.monitor = monitor;
  series.destinations = destinations;
  series.round_period_s = round_period_s;
  series.views.reserve(rounds);

  RoutingState state = compute_routing_state(graph, destinations);
  for (std::size_t t = 0; t < rounds; ++t) {
    if (t > 0 && rewires_per_round > 0) {
      RandomStream rng = substream(seed, "rewire", t);
      for (std::size_t r = 0; r < rewires_per_round; ++r) {
        try {
          auto [next, event] = rewire_step(graph, rng);
          event.round_index = t;
          series.rewire_log.push_back(event);
          graph = std::move(next);
        } catch (const std::exception& e) {
          throw SimulationError(t, e.what());
        }
      }
      state = compute_routing_state(graph, destinations);
    }
    EgoView view = tracetree_round(graph, state, lbs, monitor, destinations, derive_seed(seed, "round", t), t,
                                   options);
    view.timestamp_s = static_cast<std::int64_t>(t) * round_period_s;
    if (observer) observer(t, graph, view);
    series.views.push_back(std::move(view));
  }
  return series;
}

RoundSeries radar_run(const ExperimentConfig& config, const RoundObserver& observer, const TraceOptions& options) {
  validate(config);
  const auto n = static_cast<std::size_t>(config.n);

  Graph graph = [&] {
    try {
      return generate_connected_graph(n, config.m, derive_seed(config.seed, "graph"));
    } catch (const GenerationError& e) {
      throw SimulationError(0, e.what());
    }
  }();
  LoadBalancerSet lbs = designate_load_balancers(n, config.lb_fraction, derive_seed(config.seed, "balancers"));

  // Monitor and destinations: uniform without replacement (partial Fisher-Yates).
  RandomStream pick = substream(config.seed, "endpoints");
  std::vector<NodeId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<NodeId>(i);
  const std::size_t wanted = static_cast<std::size_t>(config.num_destinations) + 1;
  for (std::size_t i = 0; i < wanted; ++i) std::swap(ids[i], ids[i + pick.index(n - i)]);
  const NodeId monitor = ids[0];
  std::vector<NodeId> destinations(ids.begin() + 1, ids.begin() + static_cast<std::ptrdiff_t>(wanted));

  RoundSeries series = simulate_rounds(std::move(graph), lbs, monitor, std::move(destinations), config.rounds,
                                       config.rewires_per_round, config.seed, config.round_period_s, observer,
                                       options);
  series.config = config;
  return series;
}

}  // namespace egodyn
