#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rulingset/domination.hpp"
#include "rulingset/generators.hpp"
#include "rulingset/graph.hpp"

namespace rulingset {

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Every vertex outside S within distance k of S.
struct PlainK {
  std::uint32_t k = 1;
  friend bool operator==(const PlainK&, const PlainK&) = default;
};

/// Members pairwise at distance >= alpha; every other vertex within beta of S.
struct AlphaBeta {
  std::uint32_t alpha = 2;
  std::uint32_t beta = 1;
  friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

using RulingSpec = std::variant<PlainK, AlphaBeta>;

enum class DominationMethod { Exact, Greedy };
enum class MisMethod { Luby, Greedy };

struct RulingReport {
  VertexSet set;
  RulingSpec spec;
  std::string method;
  bool valid = false;
  bool optimal = false;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;

  std::size_t size() const { return set.size(); }
};

struct CoverageCheck {
  bool ok = false;
  /// Vertices farther than k from every member, ascending.
  std::vector<Vertex> violators;
};

struct AlphaBetaCheck {
  bool ok() const { return close_pairs.empty() && uncovered.empty(); }

  /// Member pairs (u < v) at distance < alpha, ascending.
  std::vector<Edge> close_pairs;
  /// Non-members farther than beta from every member, ascending.
  std::vector<Vertex> uncovered;
};

/// Multi-source BFS from S truncated at depth k. Throws GraphError for k == 0.
CoverageCheck verify_k_ruling(const Graph& g, const VertexSet& s, std::uint32_t k);

AlphaBetaCheck verify_alpha_beta(const Graph& g, const VertexSet& s, std::uint32_t alpha,
                                 std::uint32_t beta);

/// Minimum dominating set of the k-th power, checked on the original graph.
RulingReport min_k_ruling_set(const Graph& g, std::uint32_t k, DominationMethod method,
                              std::size_t exact_cap = kDefaultExactCap);

/// Maximal independent set of the (alpha-1)-th power: an (alpha, alpha-1)
/// ruling set. Throws GraphError for alpha < 2.
RulingReport alpha_ruling_set(const Graph& g, std::uint32_t alpha, MisMethod method,
                              std::uint64_t seed = 0);

/// Minimum k-ruling set by subset enumeration (size first, then lexicographic).
/// Shares nothing with the power/domination path. Throws SizeLimitError above
/// `cap` vertices; `cap` may not exceed 64.
RulingReport brute_force_min_k_ruling(const Graph& g, std::uint32_t k,
                                      std::size_t cap = kDefaultOracleCap);

enum class WitnessFamily { Path, Cycle, Random, Mixed };

struct WitnessSearch {
  WitnessFamily family = WitnessFamily::Mixed;
  std::uint32_t alpha = 2;
  std::uint32_t beta = 2;
  std::size_t budget = 100;
  std::uint64_t seed = 0;
  /// Instances larger than this are skipped but still count toward the budget.
  std::size_t exact_cap = kDefaultExactCap;
};

struct Witness {
  std::size_t instance = 0;
  GeneratorSpec generator;
  Graph graph;
  VertexSet set;
  std::string pipeline;
  AlphaBetaCheck check;
};

/// Generator spec for instance `index` of a witness search family.
GeneratorSpec witness_instance(WitnessFamily family, std::size_t index, std::uint64_t seed);

/// Searches for an instance where the mismatched pipeline returns a set that
/// fails verify_alpha_beta. For beta > alpha-1 the pipeline is the exact
/// dominating set of the beta-th power; for beta < alpha-1 it is the greedy
/// MIS of the (alpha-1)-th power. Throws GraphError when beta == alpha-1.
std::optional<Witness> find_beta_mismatch_witness(const WitnessSearch& search);

std::optional<WitnessFamily> parse_witness_family(const std::string& name);
std::string to_string(WitnessFamily family);

}  // namespace rulingset
