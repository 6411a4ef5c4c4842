#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rulingset/graph.hpp"

using namespace rulingset;

TEST_CASE("build_graph collapses duplicate edges") {
  std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}};
  Graph g = build_graph(3, edges);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("build_graph accepts an edgeless graph") {
  Graph g(2, {});
  CHECK(g.edge_count() == 0);
  CHECK(g.degree(0) == 0);
}

TEST_CASE("build_graph rejects self-loops and naming the pair") {
  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_WITH_AS(build_graph(2, loop), doctest::Contains("(0, 0)"), GraphError);
}

TEST_CASE("build_graph rejects out-of-range ids") {
  std::vector<Edge> edges{{0, 3}};
  CHECK_THROWS_AS(build_graph(3, edges), GraphError);
}

TEST_CASE("from_rows rejects asymmetric rows") {
  CHECK_THROWS_AS(Graph::from_rows({{1}, {}}), GraphError);
  CHECK_THROWS_AS(Graph::from_rows({{0}}), GraphError);
  CHECK_NOTHROW(Graph::from_rows({{1}, {0}}));
}

TEST_CASE("distance on a path, identity and across components") {
  Graph p4 = oracle::path(4);
  CHECK(distance(p4, 0, 3) == Distance::hops(3));
  for (Vertex v = 0; v < 4; ++v) CHECK(distance(p4, v, v) == Distance::hops(0));

  Graph split(3, {{0, 1}});
  CHECK_FALSE(distance(split, 0, 2).reachable());
  CHECK(distance(split, 0, 2) == Distance::unreachable());
  CHECK_THROWS_AS(distance(split, 0, 3), GraphError);
}

TEST_CASE("closed_neighborhood") {
  CHECK(closed_neighborhood(oracle::star(4), 0) == VertexSet{0, 1, 2, 3});
  CHECK(closed_neighborhood(Graph(3, {}), 1) == VertexSet{1});
  CHECK(closed_neighborhood(oracle::path(3), 1) == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(closed_neighborhood(oracle::path(3), 5), GraphError);
}

TEST_CASE("bfs_within") {
  CHECK(bfs_within(oracle::path(5), 2, 2) == VertexSet{0, 1, 2, 3, 4});
  CHECK(bfs_within(oracle::path(5), 2, 0) == VertexSet{2});
  CHECK(bfs_within(oracle::cycle(6), 0, 1) == VertexSet{0, 1, 5});
  CHECK_THROWS_AS(bfs_within(oracle::path(5), 9, 1), GraphError);
}

TEST_CASE("distance agrees with Floyd-Warshall and obeys the triangle inequality") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 30;
    Graph g = oracle::random_graph(n, 0.05 + 0.05 * (trial % 6), rng);
    auto d = oracle::distance_matrix(g);
    std::vector<std::vector<Distance>> dist(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        dist[u].push_back(distance(g, u, v));
        Distance expected = d[u][v] < oracle::kInf ? Distance::hops(d[u][v]) : Distance::unreachable();
        REQUIRE(dist[u][v] == expected);
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = 0; w < n; ++w) {
          if (dist[u][v].reachable() && dist[v][w].reachable()) {
            REQUIRE(dist[u][w].reachable());
            CHECK(dist[u][w].value() <= dist[u][v].value() + dist[v][w].value());
          }
        }
      }
    }
  }
}

TEST_CASE("bfs_within is exactly the distance ball") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 30;
    Graph g = oracle::random_graph(n, 0.1, rng);
    auto d = oracle::distance_matrix(g);
    for (Vertex v = 0; v < n; ++v) {
      for (std::uint32_t r = 0; r <= 6; ++r) {
        std::vector<Vertex> expected;
        for (Vertex u = 0; u < n; ++u) {
          if (d[v][u] <= static_cast<int>(r)) expected.push_back(u);
        }
        REQUIRE(bfs_within(g, v, r) == VertexSet(expected));
      }
    }
  }
}

TEST_CASE("construction ignores edge order") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(20, 0.2, rng);
    auto edges = g.edges();
    for (auto& e : edges) {
      if (rng() & 1u) std::swap(e.first, e.second);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    CHECK(Graph(20, edges) == g);
  }
}

TEST_CASE("adjacency invariants: symmetric, loop-free, m is half the degree sum") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(25, 0.3, rng);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < 25; ++v) {
      degree_sum += g.degree(v);
      for (Vertex u : g.neighbors(v)) {
        CHECK(u != v);
        CHECK(g.adjacent(u, v));
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("connected_components numbers components by lowest member") {
  Graph g(5, {{3, 4}, {0, 2}});
  CHECK(connected_components(g) == std::vector<std::uint32_t>{0, 1, 0, 2, 2});
}
