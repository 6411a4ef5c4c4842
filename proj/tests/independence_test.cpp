#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rulingset/domination.hpp"
#include "rulingset/generators.hpp"
#include "rulingset/independence.hpp"

using namespace rulingset;

TEST_CASE("is_maximal_independent reports the kind of violation") {
  CHECK(is_maximal_independent(oracle::path(3), {0, 2}).ok());

  auto extendable = is_maximal_independent(oracle::path(3), {0});
  CHECK(extendable.violation == MisCheck::Violation::Extendable);
  CHECK(extendable.extendable == 2u);

  auto adjacent = is_maximal_independent(oracle::complete(3), {0, 1});
  CHECK(adjacent.violation == MisCheck::Violation::AdjacentPair);
  CHECK(adjacent.adjacent_pair == Edge{0, 1});

  CHECK(is_maximal_independent(Graph(0, {}), {}).ok());
  CHECK_THROWS_AS(is_maximal_independent(oracle::path(3), {3}), GraphError);
}

TEST_CASE("luby on edgeless and complete graphs") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    auto edgeless = luby_mis(Graph(5, {}), seed);
    CHECK(edgeless.set == VertexSet{0, 1, 2, 3, 4});
    CHECK(edgeless.rounds == 1);
    CHECK(edgeless.seed == seed);

    auto k6 = luby_mis(oracle::complete(6), seed);
    CHECK(k6.set.size() == 1);
    CHECK(k6.rounds == 1);
  }
  CHECK(luby_mis(Graph(0, {}), 3).rounds == 0);
}

TEST_CASE("luby on G(10, 0.3) with seed 42 is valid and replays identically") {
  Graph g = generate({Family::RandomGnp, 10, 0.3, 42, 0, 0});
  auto first = luby_mis(g, 42);
  auto second = luby_mis(g, 42);
  CHECK(is_maximal_independent(g, first.set).ok());
  CHECK(first.set == second.set);
  CHECK(first.rounds == second.rounds);
}

TEST_CASE("luby draws are keyed by seed, round and vertex") {
  CHECK(luby_draw(1, 0, 0) == luby_draw(1, 0, 0));
  CHECK(luby_draw(1, 0, 0) != luby_draw(2, 0, 0));
  CHECK(luby_draw(1, 0, 0) != luby_draw(1, 1, 0));
  CHECK(luby_draw(1, 0, 0) != luby_draw(1, 0, 1));
}

TEST_CASE("greedy MIS follows the ascending scan") {
  CHECK(greedy_mis(oracle::path(4)).set == VertexSet{0, 2});
  CHECK(greedy_mis(oracle::complete(4)).set == VertexSet{0});
  CHECK(greedy_mis(oracle::cycle(5)).set == VertexSet{0, 2});
  CHECK_FALSE(greedy_mis(oracle::cycle(5)).seed.has_value());
}

TEST_CASE("every MIS result is maximal independent and dominating") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 50;
    Graph g = oracle::random_graph(n, 0.02 + 0.04 * (trial % 8), rng);
    std::vector<MisResult> results{greedy_mis(g)};
    for (std::uint64_t seed : {0ull, 7ull, 12345ull}) results.push_back(luby_mis(g, seed));
    for (const auto& r : results) {
      REQUIRE(is_maximal_independent(g, r.set).ok());
      CHECK(is_dominating(g, r.set).dominating);
      CHECK(r.rounds <= n);
    }
  }
}

TEST_CASE("luby is deterministic and matches the serial reference") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 80;
    Graph g = oracle::random_graph(n, 0.1, rng);
    std::uint64_t seed = rng();
    auto a = luby_mis(g, seed);
    auto b = luby_mis(g, seed);
    auto ref = serial::luby_mis(g, seed);
    CHECK(a.set == b.set);
    CHECK(a.rounds == b.rounds);
    CHECK(a.set == ref.set);
    CHECK(a.rounds == ref.rounds);
  }
}
