#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rulingset/graph.hpp"

namespace rulingset {

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A graph whose dense ids carry the labels they were read with.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  std::optional<Vertex> find(const std::string& label) const;

  /// Labels "0".."n-1" for a graph that came from a generator or transform.
  static LabeledGraph with_numeric_labels(Graph g);
  /// Same labels, different edges (vertex count must match).
  LabeledGraph with_graph(Graph g) const;

 private:
  std::unordered_map<std::string, Vertex> index_;
  friend LabeledGraph parse_edge_list(std::string_view text);
  void rebuild_index();
};

/// Format:
///   # comment            ignored, as are blank lines
///   v <label>            declares a vertex (isolated vertices need this)
///   <label> <label>      an edge
/// Labels are arbitrary whitespace-free tokens, numbered in order of first
/// appearance. Duplicate edges collapse; self-loops are errors.
LabeledGraph parse_edge_list(std::string_view text);

/// Writes a `v` line per vertex in id order, then one line per edge, so that
/// parsing the output reproduces the same ids.
std::string serialize_edge_list(const LabeledGraph& g);

/// Whitespace-separated labels; every label must exist in `g`.
VertexSet parse_vertex_set(std::string_view text, const LabeledGraph& g);

std::string serialize_vertex_set(const VertexSet& s, const LabeledGraph& g);

}  // namespace rulingset
