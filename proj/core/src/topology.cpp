#include "egodyn/topology.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "egodyn/error.hpp"

namespace egodyn {

namespace {

std::uint64_t pair_key(Edge e) { return (static_cast<std::uint64_t>(e.u) << 32) | e.v; }

void check_gnm_bounds(std::size_t n, std::size_t m) {
  if (n < 2) throw ParameterError("random graph needs n >= 2 (got " + std::to_string(n) + ")");
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m + 1 < n || m > max_edges) {
    throw ParameterError("random graph needs n-1 <= m <= n(n-1)/2 (got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m) + ")");
  }
}

Edge random_pair(std::size_t n, RandomStream& rng) {
  const auto a = static_cast<NodeId>(rng.index(n));
  auto b = static_cast<NodeId>(rng.index(n - 1));
  if (b >= a) ++b;
  return Edge(a, b);
}

// Path search from `from` to `to` in g with `skip` treated as absent and
// `extra` treated as present.
bool reachable_after_swap(const Graph& g, Edge skip, Edge extra, NodeId from, NodeId to,
                          std::vector<std::uint32_t>& mark, std::uint32_t stamp) {
  if (from == to) return true;
  std::vector<NodeId> stack{from};
  mark[from] = stamp;
  auto visit = [&](NodeId u, NodeId w) {
    if (Edge(u, w) == skip || mark[w] == stamp) return false;
    if (w == to) return true;
    mark[w] = stamp;
    stack.push_back(w);
    return false;
  };
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(u)) {
      if (visit(u, w)) return true;
    }
    if (u == extra.u && visit(u, extra.v)) return true;
    if (u == extra.v && visit(u, extra.u)) return true;
  }
  return false;
}

}  // namespace

std::vector<Edge> sample_gnm_edges(std::size_t n, std::size_t m, RandomStream& rng) {
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<Edge> edges;
  edges.reserve(m);
  if (2 * static_cast<std::uint64_t>(m) > max_edges) {
    // Dense: partial Fisher-Yates over the full pair list (at most 2m entries).
    std::vector<Edge> all;
    all.reserve(max_edges);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto j = i + rng.index(all.size() - i);
      std::swap(all[i], all[j]);
    }
    all.resize(m);
    edges = std::move(all);
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(2 * m);
    while (edges.size() < m) {
      const Edge e = random_pair(n, rng);
      if (seen.insert(pair_key(e)).second) edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Graph generate_random_graph(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t max_attempts) {
  check_gnm_bounds(n, m);
  RandomStream rng(seed);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto edges = sample_gnm_edges(n, m, rng);
    if (is_connected(n, edges)) return GraphBuilder::unchecked(n, std::move(edges));
  }
  throw GenerationError("no connected G(" + std::to_string(n) + ", " + std::to_string(m) + ") draw in " +
                        std::to_string(max_attempts) + " attempts; use a larger m");
}

Graph generate_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t max_attempts) {
  check_gnm_bounds(n, m);
  RandomStream rng(seed);
  std::vector<Edge> edges;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    edges = sample_gnm_edges(n, m, rng);
    if (is_connected(n, edges)) return GraphBuilder::unchecked(n, std::move(edges));
  }
  if (edges.empty()) edges = sample_gnm_edges(n, m, rng);

  // Repair. With m >= n-1, a disconnected graph always has a cycle edge, so
  // each pass merges two components while keeping m fixed.
  auto label = connected_components(n, edges);
  auto components = *std::max_element(label.begin(), label.end()) + 1;
  while (components > 1) {
    const std::size_t pick = rng.index(edges.size());
    std::vector<Edge> without = edges;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(pick));
    auto relabel = connected_components(n, without);
    if (*std::max_element(relabel.begin(), relabel.end()) + 1 != components) continue;

    Edge join;
    do {
      join = random_pair(n, rng);
    } while (relabel[join.u] == relabel[join.v]);
    without.insert(std::lower_bound(without.begin(), without.end(), join), join);
    edges = std::move(without);
    label = connected_components(n, edges);
    components = *std::max_element(label.begin(), label.end()) + 1;
  }
  return GraphBuilder::unchecked(n, std::move(edges));
}

std::pair<Graph, RewireEvent> rewire_step(const Graph& g, RandomStream& rng, std::size_t max_attempts) {
  const std::size_t n = g.node_count();
  const std::uint64_t absent = g.absent_pair_count();
  if (absent == 0) throw ParameterError("rewire_step: graph is complete, no absent pair to add");

  const auto edges = g.edges();
  // Sparse graphs sample absent pairs by rejection; dense ones enumerate them.
  const bool enumerate_absent = absent * 4 < static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<Edge> absent_pairs;
  if (enumerate_absent) {
    absent_pairs.reserve(absent);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) absent_pairs.emplace_back(u, v);
      }
    }
  }

  std::vector<std::uint32_t> mark(n, 0);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const Edge removed = edges[rng.index(edges.size())];
    Edge added;
    if (enumerate_absent) {
      added = absent_pairs[rng.index(absent_pairs.size())];
    } else {
      do {
        added = random_pair(n, rng);
      } while (g.has_edge(added.u, added.v));
    }
    if (reachable_after_swap(g, removed, added, removed.u, removed.v, mark,
                             static_cast<std::uint32_t>(attempt + 1))) {
      return {g.with_replaced_edge(removed, added), RewireEvent{removed, added, 0}};
    }
  }
  throw RewireError("no connectivity-preserving rewire in " + std::to_string(max_attempts) + " attempts");
}

}  // namespace egodyn
