#include <doctest.h>

#include "oracles.hpp"
#include "rulingset/generators.hpp"

using namespace rulingset;

TEST_CASE("deterministic families") {
  CHECK(generate({Family::Cycle, 6}) == oracle::cycle(6));
  CHECK(generate({Family::Star, 5}) == oracle::star(5));
  CHECK(generate({Family::Path, 7}) == oracle::path(7));
  CHECK(generate({Family::Complete, 5}) == oracle::complete(5));
  CHECK(generate({Family::Empty, 4}).edge_count() == 0);

  Graph grid = generate({Family::Grid, 6, 0.0, 0, 2, 3});
  CHECK(grid.edge_count() == 7);
  CHECK(grid.adjacent(0, 3));
  CHECK(grid.adjacent(1, 2));
  CHECK_FALSE(grid.adjacent(2, 3));
}

TEST_CASE("random families are reproducible per seed") {
  GeneratorSpec gnp{Family::RandomGnp, 10, 0.3, 7};
  CHECK(generate(gnp) == generate(gnp));
  GeneratorSpec other = gnp;
  other.seed = 8;
  CHECK_FALSE(generate(gnp) == generate(other));

  GeneratorSpec tree{Family::RandomTree, 30, 0.0, 5};
  Graph t = generate(tree);
  CHECK(t == generate(tree));
  CHECK(t.edge_count() == 29);
  CHECK(oracle::component_count(t) == 1);
}

TEST_CASE("gnp extremes") {
  CHECK(generate({Family::RandomGnp, 8, 0.0, 1}).edge_count() == 0);
  CHECK(generate({Family::RandomGnp, 8, 1.0, 1}) == oracle::complete(8));
}

TEST_CASE("invalid parameters are named") {
  CHECK_THROWS_WITH_AS(generate({Family::RandomGnp, 5, 1.5, 0}), doctest::Contains("p="), GraphError);
  CHECK_THROWS_WITH_AS(generate({Family::Grid, 7, 0.0, 0, 2, 3}), doctest::Contains("rows*cols"),
                       GraphError);
  CHECK_THROWS_AS(generate({Family::Cycle, 2}), GraphError);
}

TEST_CASE("family names round-trip") {
  for (auto f : {Family::Path, Family::Cycle, Family::Star, Family::Grid, Family::RandomGnp,
                 Family::RandomTree, Family::Complete, Family::Empty}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_FALSE(parse_family("hypercube").has_value());
  CHECK(describe({Family::RandomGnp, 10, 0.3, 7}) == "random_gnp(n=10,p=0.3,seed=7)");
}
