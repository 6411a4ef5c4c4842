#pragma once

#include <cstdint>
#include <optional>

#include "rulingset/graph.hpp"

namespace rulingset {

inline constexpr std::size_t kDefaultExactCap = 64;

struct DominationCheck {
  bool dominating = false;
  /// Lowest-id vertex neither in the set nor adjacent to it.
  std::optional<Vertex> first_uncovered;
};

struct DominationResult {
  VertexSet set;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;

  std::size_t size() const { return set.size(); }
};

DominationCheck is_dominating(const Graph& g, const VertexSet& s);

/// Exact minimum dominating set. Among all minimum sets, returns the one whose
/// ascending id sequence is lexicographically smallest. Throws SizeLimitError
/// when the graph has more than `cap` vertices.
DominationResult min_dominating_set(const Graph& g, std::size_t cap = kDefaultExactCap);

/// Repeatedly takes the vertex covering the most uncovered vertices (lowest id
/// on ties).
DominationResult greedy_dominating_set(const Graph& g);

}  // namespace rulingset
