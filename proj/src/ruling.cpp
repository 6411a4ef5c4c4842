#include "rulingset/ruling.hpp"

#include <algorithm>
#include <chrono>

#include "rulingset/independence.hpp"
#include "rulingset/power.hpp"

namespace rulingset {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
}

// First size-element combination, in lexicographic order, whose balls
// cover every vertex.
std::optional<std::vector<Vertex>> first_covering_subset(const std::vector<std::uint64_t>& ball,
                                                         std::size_t size,
                                                         std::uint64_t everything) {
  const std::size_t n = ball.size();
  std::vector<Vertex> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
  while (true) {
    std::uint64_t covered = 0;
    for (Vertex v : pick) covered |= ball[v];
    if (covered == everything) return pick;
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

CoverageCheck verify_k_ruling(const Graph& g, const VertexSet& s, std::uint32_t k) {
  if (k == 0) throw GraphError("ruling distance k must be at least 1");
  check_members(g, s);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> depth(n, UINT32_MAX);
  std::vector<Vertex> queue(s.begin(), s.end());
  for (Vertex v : s) depth[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    if (depth[x] == k) continue;
    for (Vertex y : g.neighbors(x)) {
      if (depth[y] == UINT32_MAX) {
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      }
    }
  }
  CoverageCheck check;
  for (Vertex v = 0; v < n; ++v) {
    if (depth[v] == UINT32_MAX) check.violators.push_back(v);
  }
  check.ok = check.violators.empty();
  return check;
}

AlphaBetaCheck verify_alpha_beta(const Graph& g, const VertexSet& s, std::uint32_t alpha,
                                 std::uint32_t beta) {
  if (alpha == 0 || beta == 0) throw GraphError("alpha and beta must be at least 1");
  check_members(g, s);
  AlphaBetaCheck check;
  for (Vertex member : s) {
    for (Vertex other : bfs_within(g, member, alpha - 1)) {
      if (other > member && s.contains(other)) check.close_pairs.emplace_back(member, other);
    }
  }
  check.uncovered = verify_k_ruling(g, s, beta).violators;
  return check;
}

RulingReport min_k_ruling_set(const Graph& g, std::uint32_t k, DominationMethod method,
                              std::size_t exact_cap) {
  auto start = Clock::now();
  Graph power = power_graph(g, k);
  DominationResult result = method == DominationMethod::Exact
                                ? min_dominating_set(power, exact_cap)
                                : greedy_dominating_set(power);
  RulingReport report;
  report.set = std::move(result.set);
  report.spec = PlainK{k};
  report.method = method == DominationMethod::Exact ? "mds-exact" : "mds-greedy";
  report.valid = verify_k_ruling(g, report.set, k).ok;
  report.optimal = result.optimal;
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

RulingReport alpha_ruling_set(const Graph& g, std::uint32_t alpha, MisMethod method,
                              std::uint64_t seed) {
  if (alpha < 2) {
    throw GraphError("alpha must be at least 2; alpha=1 imposes no separation, use plain k-ruling");
  }
  auto start = Clock::now();
  Graph power = power_graph(g, alpha - 1);
  MisResult result = method == MisMethod::Luby ? luby_mis(power, seed) : greedy_mis(power);
  RulingReport report;
  report.set = std::move(result.set);
  report.spec = AlphaBeta{alpha, alpha - 1};
  report.method = method == MisMethod::Luby ? "mis-luby" : "mis-greedy";
  report.valid = verify_alpha_beta(g, report.set, alpha, alpha - 1).ok();
  report.optimal = false;
  report.seed = result.seed;
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

RulingReport brute_force_min_k_ruling(const Graph& g, std::uint32_t k, std::size_t cap) {
  if (k == 0) throw GraphError("ruling distance k must be at least 1");
  const std::size_t n = g.vertex_count();
  if (n > std::min<std::size_t>(cap, 64)) {
    throw SizeLimitError("brute-force oracle is capped at " +
                         std::to_string(std::min<std::size_t>(cap, 64)) + " vertices (graph has " +
                         std::to_string(n) + ")");
  }
  auto start = Clock::now();
  const std::uint64_t everything = n == 64 ? ~0ULL : (1ULL << n) - 1;
  std::vector<std::uint64_t> ball(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : bfs_within(g, v, k)) ball[v] |= 1ULL << u;
  }

  std::vector<Vertex> found;
  for (std::size_t size = 1; size <= n && found.empty(); ++size) {
    if (auto hit = first_covering_subset(ball, size, everything)) found = std::move(*hit);
  }

  RulingReport report;
  report.set = VertexSet(std::move(found));
  report.spec = PlainK{k};
  report.method = "brute-force";
  report.valid = verify_k_ruling(g, report.set, k).ok;
  report.optimal = true;
  report.elapsed_ms = elapsed_ms(start);
  return report;
}

std::optional<WitnessFamily> parse_witness_family(const std::string& name) {
  if (name == "path") return WitnessFamily::Path;
  if (name == "cycle") return WitnessFamily::Cycle;
  if (name == "random") return WitnessFamily::Random;
  if (name == "mixed") return WitnessFamily::Mixed;
  return std::nullopt;
}

std::string to_string(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::Path: return "path";
    case WitnessFamily::Cycle: return "cycle";
    case WitnessFamily::Random: return "random";
    case WitnessFamily::Mixed: return "mixed";
  }
  return "unknown";
}

GeneratorSpec witness_instance(WitnessFamily family, std::size_t index, std::uint64_t seed) {
  if (family == WitnessFamily::Mixed) {
    constexpr WitnessFamily kRotation[] = {WitnessFamily::Path, WitnessFamily::Cycle,
                                           WitnessFamily::Random};
    return witness_instance(kRotation[index % 3], index / 3, seed);
  }
  GeneratorSpec spec;
  switch (family) {
    case WitnessFamily::Path:
      spec.family = Family::Path;
      spec.n = 2 + index;
      break;
    case WitnessFamily::Cycle:
      spec.family = Family::Cycle;
      spec.n = 3 + index;
      break;
    default:
      spec.family = Family::RandomGnp;
      spec.n = 4 + index % 9;
      spec.p = index % 2 == 0 ? 0.3 : 0.5;
      spec.seed = seed + index;
      break;
  }
  return spec;
}

std::optional<Witness> find_beta_mismatch_witness(const WitnessSearch& search) {
  const std::uint32_t alpha = search.alpha;
  const std::uint32_t beta = search.beta;
  if (alpha == 0 || beta == 0) throw GraphError("alpha and beta must be at least 1");
  if (beta + 1 == alpha) {
    throw GraphError("beta = alpha-1 is the case the MIS pipeline solves; no witness exists");
  }
  const bool over = beta > alpha - 1;
  for (std::size_t i = 0; i < search.budget; ++i) {
    GeneratorSpec spec = witness_instance(search.family, i, search.seed);
    if (over && spec.n > search.exact_cap) continue;
    Graph g = generate(spec);
    VertexSet set = over ? min_dominating_set(power_graph(g, beta), search.exact_cap).set
                         : greedy_mis(power_graph(g, alpha - 1)).set;
    AlphaBetaCheck check = verify_alpha_beta(g, set, alpha, beta);
    if (!check.ok()) {
      return Witness{i,
                     spec,
                     std::move(g),
                     std::move(set),
                     over ? "mds-exact on power " + std::to_string(beta)
                          : "mis-greedy on power " + std::to_string(alpha - 1),
                     std::move(check)};
    }
  }
  return std::nullopt;
}

}  // namespace rulingset
