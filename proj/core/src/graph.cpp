#include "egodyn/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "egodyn/error.hpp"

namespace egodyn {

namespace {

void validate_edges(std::size_t node_count, const std::vector<Edge>& sorted) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Edge& e = sorted[i];
    if (e.u == e.v) throw ParameterError("self-loop on node " + std::to_string(e.u));
    if (e.v >= node_count) {
      throw ParameterError("edge endpoint " + std::to_string(e.v) + " out of range for " +
                           std::to_string(node_count) + " nodes");
    }
    if (i > 0 && sorted[i - 1] == e) {
      throw ParameterError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
  }
}

}  // namespace

Graph GraphBuilder::unchecked(std::size_t node_count, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  validate_edges(node_count, edges);
  Graph g;
  g.adjacency_.resize(node_count);
  for (const Edge& e : edges) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::from_edges(std::size_t node_count, std::vector<Edge> edges) {
  if (node_count == 0) throw ParameterError("graph needs at least one node");
  Graph g = GraphBuilder::unchecked(node_count, std::move(edges));
  if (!is_connected(node_count, g.edges_)) throw ParameterError("graph is not connected");
  return g;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= node_count() || b >= node_count()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::uint64_t Graph::absent_pair_count() const noexcept {
  const std::uint64_t n = node_count();
  return n * (n - 1) / 2 - edges_.size();
}

Graph Graph::with_replaced_edge(Edge removed, Edge added) const {
  Graph g = *this;
  auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), removed);
  if (it == g.edges_.end() || *it != removed) throw ParameterError("replaced edge is not present");
  if (added.u == added.v || added.v >= node_count() || has_edge(added.u, added.v)) {
    throw ParameterError("added pair is not an absent node pair");
  }
  g.edges_.erase(it);
  g.edges_.insert(std::lower_bound(g.edges_.begin(), g.edges_.end(), added), added);

  auto unlink = [&g](NodeId a, NodeId b) {
    auto& nbrs = g.adjacency_[a];
    nbrs.erase(std::lower_bound(nbrs.begin(), nbrs.end(), b));
  };
  auto link = [&g](NodeId a, NodeId b) {
    auto& nbrs = g.adjacency_[a];
    nbrs.insert(std::lower_bound(nbrs.begin(), nbrs.end(), b), b);
  };
  unlink(removed.u, removed.v);
  unlink(removed.v, removed.u);
  link(added.u, added.v);
  link(added.v, added.u);
  return g;
}

std::vector<std::uint32_t> connected_components(std::size_t node_count, std::span<const Edge> edges) {
  // Union-find with path halving; roots are resolved to dense labels afterwards.
  std::vector<std::uint32_t> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : edges) {
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> root_label(node_count, kUnset);
  std::vector<std::uint32_t> label(node_count);
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < node_count; ++x) {
    const auto r = find(x);
    if (root_label[r] == kUnset) root_label[r] = next++;
    label[x] = root_label[r];
  }
  return label;
}

bool is_connected(std::size_t node_count, std::span<const Edge> edges) {
  if (node_count <= 1) return true;
  if (edges.size() + 1 < node_count) return false;
  const auto label = connected_components(node_count, edges);
  return std::all_of(label.begin(), label.end(), [](std::uint32_t l) { return l == 0; });
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  constexpr auto kUnreachable = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> frontier{source};
  dist.at(source) = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId u = frontier[head];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace egodyn
