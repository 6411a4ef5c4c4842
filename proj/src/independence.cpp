#include "rulingset/independence.hpp"

namespace rulingset {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool beats(std::uint64_t value_v, Vertex v, std::uint64_t value_u, Vertex u) {
  return value_v > value_u || (value_v == value_u && v < u);
}

enum : std::uint8_t { kActive = 0, kJoined = 1, kRemoved = 2 };

// Commits the winners of one round. Winners are never adjacent, so the
// order of commits does not matter.
void commit_round(const Graph& g, const std::vector<std::uint8_t>& wins,
                  std::vector<std::uint8_t>& state, std::size_t& active) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!wins[v]) continue;
    state[v] = kJoined;
    --active;
    for (Vertex u : g.neighbors(v)) {
      if (state[u] == kActive) {
        state[u] = kRemoved;
        --active;
      }
    }
  }
}

bool wins_round(const Graph& g, const std::vector<std::uint8_t>& state,
                const std::vector<std::uint64_t>& draw, Vertex v) {
  for (Vertex u : g.neighbors(v)) {
    if (state[u] == kActive && !beats(draw[v], v, draw[u], u)) return false;
  }
  return true;
}

MisResult collect(const std::vector<std::uint8_t>& state, std::uint32_t rounds,
                  std::optional<std::uint64_t> seed) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < state.size(); ++v) {
    if (state[v] == kJoined) members.push_back(v);
  }
  return {VertexSet(std::move(members)), rounds, seed};
}

}  // namespace

std::uint64_t luby_draw(std::uint64_t seed, std::uint32_t round, Vertex vertex) {
  std::uint64_t key = (static_cast<std::uint64_t>(round) << 32) | vertex;
  return splitmix64(splitmix64(seed) ^ key);
}

MisCheck is_maximal_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u && s.contains(u)) {
        return {MisCheck::Violation::AdjacentPair, Edge{v, u}, std::nullopt};
      }
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    bool blocked = false;
    for (Vertex u : g.neighbors(v)) {
      if (s.contains(u)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return {MisCheck::Violation::Extendable, std::nullopt, v};
  }
  return {};
}

MisResult luby_mis(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  const auto count = static_cast<std::int64_t>(n);
  std::vector<std::uint8_t> state(n, kActive);
  std::vector<std::uint64_t> draw(n, 0);
  std::vector<std::uint8_t> wins(n, 0);
  std::size_t active = n;
  std::uint32_t round = 0;
  while (active > 0) {
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < count; ++v) {
      if (state[v] == kActive) draw[v] = luby_draw(seed, round, static_cast<Vertex>(v));
    }
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < count; ++v) {
      wins[v] = state[v] == kActive && wins_round(g, state, draw, static_cast<Vertex>(v));
    }
    commit_round(g, wins, state, active);
    ++round;
  }
  return collect(state, round, seed);
}

MisResult serial::luby_mis(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> state(n, kActive);
  std::vector<std::uint64_t> draw(n, 0);
  std::vector<std::uint8_t> wins(n, 0);
  std::size_t active = n;
  std::uint32_t round = 0;
  while (active > 0) {
    for (Vertex v = 0; v < n; ++v) {
      if (state[v] == kActive) draw[v] = luby_draw(seed, round, v);
    }
    for (Vertex v = 0; v < n; ++v) {
      wins[v] = state[v] == kActive && wins_round(g, state, draw, v);
    }
    commit_round(g, wins, state, active);
    ++round;
  }
  return collect(state, round, seed);
}

MisResult greedy_mis(const Graph& g) {
  std::vector<std::uint8_t> state(g.vertex_count(), kActive);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (state[v] != kActive) continue;
    state[v] = kJoined;
    for (Vertex u : g.neighbors(v)) {
      if (state[u] == kActive) state[u] = kRemoved;
    }
  }
  return collect(state, 0, std::nullopt);
}

}  // namespace rulingset
