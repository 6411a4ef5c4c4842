#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rulingset {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input: ids out of range, self-loops, bad sizes.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact search is asked to run above its configured size cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  bool contains(Vertex v) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& ids() const { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Shortest-path hop count, or unreachable.
class Distance {
 public:
  static Distance unreachable() { return Distance(); }
  static Distance hops(std::uint32_t h) { return Distance(h); }

  bool reachable() const { return value_.has_value(); }
  std::uint32_t value() const { return value_.value(); }

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  Distance() = default;
  explicit Distance(std::uint32_t h) : value_(h) {}
  std::optional<std::uint32_t> value_;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as sorted
/// adjacency rows in compressed form.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge sequence. Duplicates (in either orientation)
  /// collapse; self-loops and out-of-range ids throw GraphError.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from already-symmetric sorted rows. Checked.
  static Graph from_rows(std::vector<std::vector<Vertex>> rows);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

Distance distance(const Graph& g, Vertex u, Vertex v);

/// N[v] = N(v) plus v itself.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Vertices at hop distance <= radius from v, v included.
VertexSet bfs_within(const Graph& g, Vertex v, std::uint32_t radius);

/// Hop distances from v to every vertex; unreachable entries are nullopt.
std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, Vertex v);

/// Component id per vertex, numbered by lowest member in ascending order.
std::vector<std::uint32_t> connected_components(const Graph& g);

/// Returns the graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::string to_string(const VertexSet& s);

}  // namespace rulingset
