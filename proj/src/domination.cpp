#include "rulingset/domination.hpp"

#include <algorithm>

namespace rulingset {
namespace {

std::vector<Vertex> closed_row(const Graph& g, Vertex v) {
  auto row = g.neighbors(v);
  std::vector<Vertex> out(row.begin(), row.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

// Branch-and-bound over "which member covers the lowest uncovered vertex".
// Every call to feasible() leaves the cover state as it found it.
class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : cover_(g.vertex_count(), 0) {
    closed_.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      closed_.push_back(closed_row(g, v));
      max_closed_ = std::max(max_closed_, closed_.back().size());
    }
    uncovered_ = g.vertex_count();
  }

  void add(Vertex v) {
    for (Vertex x : closed_[v]) {
      if (cover_[x]++ == 0) --uncovered_;
    }
  }

  void remove(Vertex v) {
    for (Vertex x : closed_[v]) {
      if (--cover_[x] == 0) ++uncovered_;
    }
  }

  std::size_t uncovered() const { return uncovered_; }
  std::size_t max_closed() const { return max_closed_; }
  std::uint64_t nodes() const { return nodes_; }

  /// Can at most `budget` more members, all with id >= `floor`, cover the rest?
  bool feasible(std::size_t budget, Vertex floor) {
    ++nodes_;
    if (uncovered_ == 0) return true;
    if (budget == 0 || budget * max_closed_ < uncovered_) return false;
    Vertex u = lowest_uncovered();
    for (Vertex c : closed_[u]) {
      if (c < floor) continue;
      add(c);
      bool ok = feasible(budget - 1, floor);
      remove(c);
      if (ok) return true;
    }
    return false;
  }

 private:
  Vertex lowest_uncovered() const {
    Vertex u = 0;
    while (cover_[u] != 0) ++u;
    return u;
  }

  std::vector<std::vector<Vertex>> closed_;
  std::vector<std::uint32_t> cover_;
  std::size_t uncovered_ = 0;
  std::size_t max_closed_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

DominationCheck is_dominating(const Graph& g, const VertexSet& s) {
  std::vector<std::uint8_t> covered(g.vertex_count(), 0);
  for (Vertex v : s) {
    g.check_vertex(v);
    covered[v] = 1;
    for (Vertex u : g.neighbors(v)) covered[u] = 1;
  }
  auto it = std::find(covered.begin(), covered.end(), 0);
  if (it == covered.end()) return {true, std::nullopt};
  return {false, static_cast<Vertex>(it - covered.begin())};
}

DominationResult min_dominating_set(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap) {
    throw SizeLimitError("exact dominating-set solver is capped at " + std::to_string(cap) +
                         " vertices (graph has " + std::to_string(n) +
                         "); use the greedy method or raise the cap");
  }
  CoverSearch search(g);
  std::vector<Vertex> chosen;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      search.add(v);
      chosen.push_back(v);
    }
  }

  // Smallest budget that admits a cover. Greedy bounds it from above.
  const std::size_t upper = greedy_dominating_set(g).size() - chosen.size();
  std::size_t budget = 0;
  if (search.uncovered() > 0) {
    budget = (search.uncovered() + search.max_closed() - 1) / search.max_closed();
    while (budget < upper && !search.feasible(budget, 0)) ++budget;
  }

  // Fix members one at a time, smallest id first, keeping the rest feasible.
  Vertex floor = 0;
  for (std::size_t left = budget; left > 0; --left) {
    for (Vertex v = floor; v < n; ++v) {
      if (g.degree(v) == 0) continue;
      search.add(v);
      if (search.feasible(left - 1, v + 1)) {
        chosen.push_back(v);
        floor = v + 1;
        break;
      }
      search.remove(v);
    }
  }

  return {VertexSet(std::move(chosen)), true, search.nodes()};
}

DominationResult greedy_dominating_set(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> covered(n, 0);
  std::size_t uncovered = n;
  std::vector<Vertex> chosen;
  std::uint64_t steps = 0;
  while (uncovered > 0) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t gain = covered[v] ? 0 : 1;
      for (Vertex u : g.neighbors(v)) gain += covered[u] ? 0 : 1;
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    chosen.push_back(best);
    if (!covered[best]) {
      covered[best] = 1;
      --uncovered;
    }
    for (Vertex u : g.neighbors(best)) {
      if (!covered[u]) {
        covered[u] = 1;
        --uncovered;
      }
    }
    ++steps;
  }
  return {VertexSet(std::move(chosen)), false, steps};
}

}  // namespace rulingset
