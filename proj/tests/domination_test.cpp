#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rulingset/domination.hpp"

using namespace rulingset;

TEST_CASE("is_dominating") {
  CHECK(is_dominating(oracle::star(5), {0}).dominating);

  auto path = is_dominating(oracle::path(3), {0});
  CHECK_FALSE(path.dominating);
  CHECK(path.first_uncovered == 2u);

  Graph edgeless(3, {});
  CHECK(is_dominating(edgeless, {0, 1, 2}).dominating);
  CHECK_FALSE(is_dominating(edgeless, {0, 1}).dominating);
  CHECK(is_dominating(edgeless, {0, 2}).first_uncovered == 1u);
  CHECK_FALSE(is_dominating(edgeless, {}).dominating);

  CHECK(is_dominating(Graph(0, {}), {}).dominating);
  CHECK_THROWS_AS(is_dominating(edgeless, {7}), GraphError);
}

TEST_CASE("exact solver on small named graphs") {
  // Frozen from oracle::all_min_dominating_sets.
  REQUIRE(oracle::all_min_dominating_sets(oracle::cycle(6)).front() == std::vector<Vertex>{0, 3});
  REQUIRE(oracle::all_min_dominating_sets(oracle::cycle(9)).front() ==
          std::vector<Vertex>{0, 3, 6});

  auto c6 = min_dominating_set(oracle::cycle(6));
  CHECK(c6.size() == 2);
  CHECK(c6.set == VertexSet{0, 3});
  CHECK(c6.optimal);

  CHECK(min_dominating_set(oracle::cycle(9)).size() == 3);

  for (std::size_t n : {1, 4, 9}) CHECK(min_dominating_set(oracle::complete(n)).set == VertexSet{0});

  auto edgeless = min_dominating_set(Graph(4, {}));
  CHECK(edgeless.set == VertexSet{0, 1, 2, 3});

  CHECK(min_dominating_set(Graph(0, {})).set.empty());
}

TEST_CASE("isolated vertices are always included") {
  Graph g(6, {{1, 2}, {2, 3}, {4, 5}});
  auto result = min_dominating_set(g);
  CHECK(result.set.contains(0));
  CHECK(result.size() == 3);
  CHECK(result.set == VertexSet{0, 2, 4});
}

TEST_CASE("exact solver honours its size cap") {
  CHECK_THROWS_AS(min_dominating_set(oracle::path(65)), SizeLimitError);
  CHECK_THROWS_WITH(min_dominating_set(oracle::path(10), 8), doctest::Contains("greedy"));
  CHECK_NOTHROW(min_dominating_set(oracle::path(64)));
}

TEST_CASE("exact solver scales to moderately sized sparse graphs") {
  // gamma(P_n) = ceil(n/3).
  for (std::size_t n : {30, 45, 64}) CHECK(min_dominating_set(oracle::path(n)).size() == (n + 2) / 3);
  // gamma(C_n) = ceil(n/3).
  for (std::size_t n : {30, 40}) CHECK(min_dominating_set(oracle::cycle(n)).size() == (n + 2) / 3);
}

TEST_CASE("greedy solver") {
  auto star = greedy_dominating_set(oracle::star(6));
  CHECK(star.set == VertexSet{0});
  CHECK_FALSE(star.optimal);
  CHECK(greedy_dominating_set(oracle::complete(5)).size() == 1);

  auto c6 = greedy_dominating_set(oracle::cycle(6));
  CHECK(is_dominating(oracle::cycle(6), c6.set).dominating);
  CHECK(c6.size() >= min_dominating_set(oracle::cycle(6)).size());

  CHECK(greedy_dominating_set(Graph(0, {})).set.empty());
}

TEST_CASE("exact result is the lexicographically first minimum dominating set") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 12;
    Graph g = oracle::random_graph(n, 0.1 + 0.1 * (trial % 5), rng);
    auto expected = oracle::all_min_dominating_sets(g).front();
    auto result = min_dominating_set(g);
    REQUIRE(result.set == VertexSet(expected));
  }
}

TEST_CASE("exact size equals subset enumeration on every graph with n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1u) edges.push_back(all[i]);
      }
      Graph g(n, edges);
      REQUIRE(min_dominating_set(g).size() == oracle::min_ruling_size(g, 1));
    }
  }
}

TEST_CASE("exact size equals subset enumeration on sampled graphs with n <= 8") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 6 + trial % 3;
    Graph g = oracle::random_graph(n, 0.15 + 0.1 * (trial % 6), rng);
    REQUIRE(min_dominating_set(g).size() == oracle::min_ruling_size(g, 1));
  }
}

TEST_CASE("solver invariants: validity, greedy upper bound, relabeling") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng() % 20;
    Graph g = oracle::random_graph(n, 0.2, rng);
    auto exact = min_dominating_set(g);
    auto greedy = greedy_dominating_set(g);
    CHECK(is_dominating(g, exact.set).dominating);
    CHECK(is_dominating(g, greedy.set).dominating);
    CHECK(greedy.size() >= exact.size());

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(min_dominating_set(relabel(g, perm)).size() == exact.size());
  }
  for (std::size_t n : {2, 5, 9}) {
    CHECK(greedy_dominating_set(oracle::star(n)).size() == min_dominating_set(oracle::star(n)).size());
    CHECK(greedy_dominating_set(oracle::complete(n)).size() ==
          min_dominating_set(oracle::complete(n)).size());
  }
}
