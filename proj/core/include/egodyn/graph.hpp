#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace egodyn {

using NodeId = std::uint32_t;

/// Unordered node pair, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge() = default;
  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Connected, simple, undirected graph over node ids [0, node_count).
///
/// Immutable once built: topology changes produce a new Graph value
/// (see rewire_step), so a graph handed to a round stays valid for it.
class Graph {
 public:
  /// Validates simplicity, id range and connectivity; throws ParameterError.
  static Graph from_edges(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in ascending (u, v) order.
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Neighbors of u in ascending order.
  std::span<const NodeId> neighbors(NodeId u) const { return adjacency_.at(u); }

  bool has_edge(NodeId a, NodeId b) const;

  /// Number of node pairs that are not edges.
  std::uint64_t absent_pair_count() const noexcept;

  bool is_complete() const noexcept { return absent_pair_count() == 0; }

  /// Copy with `removed` swapped for `added`. Both must be valid for this
  /// graph; connectivity of the result is not checked.
  Graph with_replaced_edge(Edge removed, Edge added) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.node_count() == b.node_count(); }

 private:
  friend class GraphBuilder;
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

/// Internal construction path that skips the connectivity requirement,
/// used by generators that check or repair connectivity themselves.
class GraphBuilder {
 public:
  static Graph unchecked(std::size_t node_count, std::vector<Edge> edges);
};

/// Component label per node, labels dense from 0 in order of lowest member id.
std::vector<std::uint32_t> connected_components(std::size_t node_count, std::span<const Edge> edges);

bool is_connected(std::size_t node_count, std::span<const Edge> edges);

/// Hop distances from `source`; unreachable nodes get UINT32_MAX.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

/// Debug dump: one "<u> <v>" line per edge, u < v, ascending.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace egodyn
