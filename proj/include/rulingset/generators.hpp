#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rulingset/graph.hpp"

namespace rulingset {

enum class Family { Path, Cycle, Star, Grid, RandomGnp, RandomTree, Complete, Empty };

struct GeneratorSpec {
  Family family = Family::Path;
  std::size_t n = 0;
  /// Edge probability, RandomGnp only.
  double p = 0.0;
  std::uint64_t seed = 0;
  /// Grid only; rows * cols must equal n.
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// Throws GraphError naming the invalid parameter.
Graph generate(const GeneratorSpec& spec);

std::optional<Family> parse_family(const std::string& name);
std::string to_string(Family family);

/// Short human-readable description, e.g. "random_gnp(n=10,p=0.3,seed=7)".
std::string describe(const GeneratorSpec& spec);

}  // namespace rulingset
