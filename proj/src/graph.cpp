#include "rulingset/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace rulingset {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  std::vector<std::vector<Vertex>> rows(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex outside 0.." + std::to_string(n) +
                       (n == 0 ? "" : "-1"));
    }
    if (u == v) {
      throw GraphError("self-loop (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") is not allowed in a simple graph");
    }
    rows[u].push_back(v);
    rows[v].push_back(u);
  }
  for (auto& row : rows) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  *this = from_rows(std::move(rows));
}

Graph Graph::from_rows(std::vector<std::vector<Vertex>> rows) {
  Graph g;
  g.n_ = rows.size();
  g.offsets_.assign(1, 0);
  g.offsets_.reserve(rows.size() + 1);
  std::size_t total = 0;
  for (const auto& row : rows) total += row.size();
  g.targets_.reserve(total);
  for (std::size_t v = 0; v < rows.size(); ++v) {
    const auto& row = rows[v];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= rows.size() || row[i] == v || (i > 0 && row[i - 1] >= row[i])) {
        throw GraphError("adjacency row " + std::to_string(v) + " is not a sorted simple row");
      }
    }
    g.targets_.insert(g.targets_.end(), row.begin(), row.end());
    g.offsets_.push_back(g.targets_.size());
  }
  if (total % 2 != 0) throw GraphError("adjacency rows are not symmetric");
  g.m_ = total / 2;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    for (Vertex u : rows[v]) {
      if (!std::binary_search(rows[u].begin(), rows[u].end(), static_cast<Vertex>(v))) {
        throw GraphError("adjacency rows are not symmetric at (" + std::to_string(v) + ", " +
                         std::to_string(u) + ")");
      }
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph with " +
                     std::to_string(n_) + " vertices");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  check_vertex(v);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<std::optional<std::uint32_t>> dist(g.vertex_count());
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  auto d = bfs_distances(g, u)[v];
  return d ? Distance::hops(*d) : Distance::unreachable();
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto row = g.neighbors(v);
  std::vector<Vertex> ids(row.begin(), row.end());
  ids.push_back(v);
  return VertexSet(std::move(ids));
}

VertexSet bfs_within(const Graph& g, Vertex v, std::uint32_t radius) {
  g.check_vertex(v);
  std::vector<std::uint32_t> depth(g.vertex_count(), UINT32_MAX);
  std::vector<Vertex> reached{v};
  depth[v] = 0;
  for (std::size_t head = 0; head < reached.size(); ++head) {
    Vertex x = reached[head];
    if (depth[x] == radius) continue;
    for (Vertex y : g.neighbors(x)) {
      if (depth[y] == UINT32_MAX) {
        depth[y] = depth[x] + 1;
        reached.push_back(y);
      }
    }
  }
  return VertexSet(std::move(reached));
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> comp(n, UINT32_MAX);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] == UINT32_MAX) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), edges);
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

}  // namespace rulingset
