#include "rulingset/power.hpp"

#include <algorithm>

namespace rulingset {
namespace {

void check_power(std::uint32_t k) {
  if (k == 0) throw GraphError("power exponent k must be at least 1");
}

// Scratch for a depth-truncated BFS. Stamps avoid clearing between sources.
class TruncatedBfs {
 public:
  explicit TruncatedBfs(std::size_t n) : stamp_(n, 0), depth_(n, 0) {}

  std::vector<Vertex> row(const Graph& g, Vertex source, std::uint32_t k) {
    ++epoch_;
    frontier_.assign(1, source);
    stamp_[source] = epoch_;
    depth_[source] = 0;
    for (std::size_t head = 0; head < frontier_.size(); ++head) {
      Vertex x = frontier_[head];
      if (depth_[x] == k) continue;
      for (Vertex y : g.neighbors(x)) {
        if (stamp_[y] != epoch_) {
          stamp_[y] = epoch_;
          depth_[y] = depth_[x] + 1;
          frontier_.push_back(y);
        }
      }
    }
    std::vector<Vertex> out(frontier_.begin() + 1, frontier_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> depth_;
  std::vector<Vertex> frontier_;
};

std::vector<Vertex> expanded_row(const Graph& current, const Graph& original, Vertex u,
                                 std::vector<std::uint8_t>& mark) {
  std::vector<Vertex> row;
  auto touch = [&](Vertex w) {
    if (w != u && !mark[w]) {
      mark[w] = 1;
      row.push_back(w);
    }
  };
  for (Vertex v : current.neighbors(u)) {
    touch(v);
    for (Vertex w : original.neighbors(v)) touch(w);
  }
  for (Vertex w : row) mark[w] = 0;
  std::sort(row.begin(), row.end());
  return row;
}

void check_round_inputs(const Graph& current, const Graph& original) {
  if (current.vertex_count() != original.vertex_count()) {
    throw GraphError("expand_round: vertex counts differ (" +
                     std::to_string(current.vertex_count()) + " vs " +
                     std::to_string(original.vertex_count()) + ")");
  }
}

GraphDelta collect_delta(const Graph& current, const std::vector<std::vector<Vertex>>& rows) {
  GraphDelta delta;
  for (Vertex u = 0; u < rows.size(); ++u) {
    auto old_row = current.neighbors(u);
    for (Vertex w : rows[u]) {
      if (u < w && !std::binary_search(old_row.begin(), old_row.end(), w)) {
        delta.added_edges.emplace_back(u, w);
      }
    }
  }
  return delta;
}

}  // namespace

namespace serial {

Graph power_graph_bfs(const Graph& g, std::uint32_t k) {
  check_power(k);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> rows(n);
  TruncatedBfs bfs(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = bfs.row(g, v, k);
  return Graph::from_rows(std::move(rows));
}

std::pair<Graph, GraphDelta> expand_round(const Graph& current, const Graph& original) {
  check_round_inputs(current, original);
  const std::size_t n = current.vertex_count();
  std::vector<std::vector<Vertex>> rows(n);
  std::vector<std::uint8_t> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) rows[u] = expanded_row(current, original, u, mark);
  GraphDelta delta = collect_delta(current, rows);
  return {Graph::from_rows(std::move(rows)), std::move(delta)};
}

}  // namespace serial

Graph power_graph(const Graph& g, std::uint32_t k, PowerMode mode) {
  check_power(k);
  if (mode == PowerMode::IterativeFaithful) return power_graph_iterative(g, k).graph;
  if (k == 1) return g;

  const auto n = static_cast<std::int64_t>(g.vertex_count());
  std::vector<std::vector<Vertex>> rows(g.vertex_count());
#pragma omp parallel
  {
    TruncatedBfs bfs(g.vertex_count());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t v = 0; v < n; ++v) {
      rows[v] = bfs.row(g, static_cast<Vertex>(v), k);
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::pair<Graph, GraphDelta> expand_round(const Graph& current, const Graph& original) {
  check_round_inputs(current, original);
  const auto n = static_cast<std::int64_t>(current.vertex_count());
  std::vector<std::vector<Vertex>> rows(current.vertex_count());
#pragma omp parallel
  {
    std::vector<std::uint8_t> mark(current.vertex_count(), 0);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t u = 0; u < n; ++u) {
      rows[u] = expanded_row(current, original, static_cast<Vertex>(u), mark);
    }
  }
  GraphDelta delta = collect_delta(current, rows);
  return {Graph::from_rows(std::move(rows)), std::move(delta)};
}

IterativeTrace power_graph_iterative(const Graph& g, std::uint32_t k) {
  check_power(k);
  IterativeTrace trace{g, 0, false};
  for (std::uint32_t remaining = k; remaining > 1; --remaining) {
    auto [next, delta] = expand_round(trace.graph, g);
    ++trace.rounds;
    if (delta.empty()) {
      trace.reached_fixpoint = true;
      break;
    }
    trace.graph = std::move(next);
  }
  return trace;
}

RuledNeighborhoods ruled_neighborhoods(const Graph& g, Vertex v) {
  auto dist = bfs_distances(g, v);
  std::vector<Vertex> one;
  std::vector<Vertex> two;
  for (Vertex u = 0; u < dist.size(); ++u) {
    if (dist[u] == 1u) one.push_back(u);
    if (dist[u] == 2u) two.push_back(u);
  }
  return {VertexSet(std::move(one)), VertexSet(std::move(two))};
}

}  // namespace rulingset
