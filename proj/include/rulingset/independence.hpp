#pragma once

#include <cstdint>
#include <optional>

#include "rulingset/graph.hpp"

namespace rulingset {

struct MisCheck {
  enum class Violation { None, AdjacentPair, Extendable };

  bool ok() const { return violation == Violation::None; }

  Violation violation = Violation::None;
  /// Set for AdjacentPair: the lexicographically first offending edge.
  std::optional<Edge> adjacent_pair;
  /// Set for Extendable: lowest-id non-member with no neighbor in the set.
  std::optional<Vertex> extendable;
};

struct MisResult {
  VertexSet set;
  std::uint32_t rounds = 0;
  std::optional<std::uint64_t> seed;
};

/// Independence is checked before maximality.
MisCheck is_maximal_independent(const Graph& g, const VertexSet& s);

/// Luby-style synchronous rounds. Each active vertex draws a 64-bit value
/// keyed by (seed, round, vertex); a vertex joins when its value beats every
/// active neighbor, with equal values going to the lower id.
MisResult luby_mis(const Graph& g, std::uint64_t seed);

/// Ascending-id scan taking every vertex with no neighbor already taken.
MisResult greedy_mis(const Graph& g);

/// Value drawn by `vertex` in `round` of luby_mis.
std::uint64_t luby_draw(std::uint64_t seed, std::uint32_t round, Vertex vertex);

namespace serial {

/// Single-threaded reference for luby_mis.
MisResult luby_mis(const Graph& g, std::uint64_t seed);

}  // namespace serial

}  // namespace rulingset
