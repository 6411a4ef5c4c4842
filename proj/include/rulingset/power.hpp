#pragma once

#include <cstdint>
#include <vector>

#include "rulingset/graph.hpp"

namespace rulingset {

enum class PowerMode {
  /// One depth-truncated BFS per vertex.
  Canonical,
  /// Repeated edge-augmentation rounds with early exit at the fixpoint.
  IterativeFaithful,
};

/// Edges added by one augmentation round, as (u, v) with u < v, ascending.
struct GraphDelta {
  std::vector<Edge> added_edges;
  bool empty() const { return added_edges.empty(); }
};

/// k-th power: same vertices, an edge between every pair at distance 1..k.
/// Throws GraphError for k == 0.
Graph power_graph(const Graph& g, std::uint32_t k, PowerMode mode = PowerMode::Canonical);

/// One augmentation round. The result holds every edge of `current` plus
/// (u, w) for each u-v edge of `current` followed by a v-w edge of `original`.
std::pair<Graph, GraphDelta> expand_round(const Graph& current, const Graph& original);

struct IterativeTrace {
  Graph graph;
  /// Augmentation rounds executed, the final empty round included.
  std::uint32_t rounds = 0;
  bool reached_fixpoint = false;
};

/// Iterative mode with its round bookkeeping exposed.
IterativeTrace power_graph_iterative(const Graph& g, std::uint32_t k);

/// Vertices exactly one hop (U) and exactly two hops (W) away from v.
struct RuledNeighborhoods {
  VertexSet at_distance_one;
  VertexSet at_distance_two;
};

RuledNeighborhoods ruled_neighborhoods(const Graph& g, Vertex v);

namespace serial {

/// Single-threaded reference for the Canonical kernel.
Graph power_graph_bfs(const Graph& g, std::uint32_t k);

/// Single-threaded reference for expand_round.
std::pair<Graph, GraphDelta> expand_round(const Graph& current, const Graph& original);

}  // namespace serial

}  // namespace rulingset
