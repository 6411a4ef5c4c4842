#include "rulingset/generators.hpp"

#include <array>
#include <random>
#include <sstream>

namespace rulingset {
namespace {

constexpr std::array<std::pair<Family, const char*>, 8> kFamilyNames{{
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Star, "star"},
    {Family::Grid, "grid"},
    {Family::RandomGnp, "random_gnp"},
    {Family::RandomTree, "random_tree"},
    {Family::Complete, "complete"},
    {Family::Empty, "empty"},
}};

Vertex id(std::size_t i) { return static_cast<Vertex>(i); }

}  // namespace

std::optional<Family> parse_family(const std::string& name) {
  for (auto [family, text] : kFamilyNames) {
    if (name == text) return family;
  }
  return std::nullopt;
}

std::string to_string(Family family) {
  for (auto [f, text] : kFamilyNames) {
    if (f == family) return text;
  }
  return "unknown";
}

std::string describe(const GeneratorSpec& spec) {
  std::ostringstream out;
  out << to_string(spec.family) << "(n=" << spec.n;
  if (spec.family == Family::Grid) out << ",rows=" << spec.rows << ",cols=" << spec.cols;
  if (spec.family == Family::RandomGnp) out << ",p=" << spec.p;
  if (spec.family == Family::RandomGnp || spec.family == Family::RandomTree) {
    out << ",seed=" << spec.seed;
  }
  out << ')';
  return out.str();
}

Graph generate(const GeneratorSpec& spec) {
  const std::size_t n = spec.n;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(id(i - 1), id(i));
      break;
    case Family::Cycle:
      if (n < 3) throw GraphError("cycle needs n >= 3 (got n=" + std::to_string(n) + ")");
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(id(i), id((i + 1) % n));
      break;
    case Family::Star:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, id(i));
      break;
    case Family::Grid:
      if (spec.rows * spec.cols != n) {
        throw GraphError("grid needs n = rows*cols (got n=" + std::to_string(n) + ", rows=" +
                         std::to_string(spec.rows) + ", cols=" + std::to_string(spec.cols) + ")");
      }
      for (std::size_t r = 0; r < spec.rows; ++r) {
        for (std::size_t c = 0; c < spec.cols; ++c) {
          std::size_t v = r * spec.cols + c;
          if (c + 1 < spec.cols) edges.emplace_back(id(v), id(v + 1));
          if (r + 1 < spec.rows) edges.emplace_back(id(v), id(v + spec.cols));
        }
      }
      break;
    case Family::RandomGnp: {
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw GraphError("random_gnp needs 0 <= p <= 1 (got p=" + std::to_string(spec.p) + ")");
      }
      std::mt19937_64 rng(spec.seed);
      std::bernoulli_distribution coin(spec.p);
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (coin(rng)) edges.emplace_back(id(u), id(v));
        }
      }
      break;
    }
    case Family::RandomTree: {
      // Each vertex attaches to a uniformly chosen earlier vertex.
      std::mt19937_64 rng(spec.seed);
      for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> parent(0, v - 1);
        edges.emplace_back(id(parent(rng)), id(v));
      }
      break;
    }
    case Family::Complete:
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(id(u), id(v));
      }
      break;
    case Family::Empty:
      break;
  }
  return Graph(n, edges);
}

}  // namespace rulingset
