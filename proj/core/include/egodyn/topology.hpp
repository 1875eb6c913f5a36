#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "egodyn/graph.hpp"
#include "egodyn/random.hpp"

namespace egodyn {

inline constexpr std::size_t kDefaultGenerationAttempts = 1000;
inline constexpr std::size_t kDefaultRewireAttempts = 1000;

/// One topology change: `removed` replaced by `added` before round `round_index`.
struct RewireEvent {
  Edge removed;
  Edge added;
  std::size_t round_index = 0;

  friend bool operator==(const RewireEvent&, const RewireEvent&) = default;
};

/// Uniform G(n, m) conditioned on connectivity by whole-graph rejection.
///
/// Requires n >= 2 and n-1 <= m <= n(n-1)/2 (ParameterError otherwise).
/// Throws GenerationError when `max_attempts` draws were all disconnected.
Graph generate_random_graph(std::size_t n, std::size_t m, std::uint64_t seed,
                            std::size_t max_attempts = kDefaultGenerationAttempts);

/// Like generate_random_graph, but when rejection runs out of attempts the
/// last draw is made connected by repeatedly swapping a cycle edge for a
/// uniformly chosen edge between two components. Node and edge counts are
/// unchanged, so sparse sizes where connected draws are vanishingly rare
/// (e.g. n=5000, m=3n) still produce a graph.
Graph generate_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed,
                               std::size_t max_attempts = kDefaultGenerationAttempts);

/// Uniform G(n, m) draw with no connectivity condition.
std::vector<Edge> sample_gnm_edges(std::size_t n, std::size_t m, RandomStream& rng);

/// Remove a uniform existing edge and add a uniform absent pair, resampling
/// both while the result would be disconnected.
///
/// ParameterError if g is complete; RewireError after `max_attempts` rejected
/// proposals. The returned event has round_index 0; callers stamp it.
std::pair<Graph, RewireEvent> rewire_step(const Graph& g, RandomStream& rng,
                                          std::size_t max_attempts = kDefaultRewireAttempts);

}  // namespace egodyn
