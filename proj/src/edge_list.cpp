#include "rulingset/edge_list.hpp"

#include <sstream>

namespace rulingset {
namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

}  // namespace

std::optional<Vertex> LabeledGraph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void LabeledGraph::rebuild_index() {
  index_.clear();
  for (Vertex v = 0; v < labels.size(); ++v) index_.emplace(labels[v], v);
}

LabeledGraph LabeledGraph::with_numeric_labels(Graph g) {
  LabeledGraph out;
  out.labels.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.labels.push_back(std::to_string(v));
  out.graph = std::move(g);
  out.rebuild_index();
  return out;
}

LabeledGraph LabeledGraph::with_graph(Graph g) const {
  if (g.vertex_count() != labels.size()) throw GraphError("label count does not match graph");
  LabeledGraph out = *this;
  out.graph = std::move(g);
  return out;
}

LabeledGraph parse_edge_list(std::string_view text) {
  LabeledGraph out;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = out.index_.emplace(label, static_cast<Vertex>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected two labels, got " + std::to_string(toks.size()) +
                                    " token(s)");
    }
    if (toks[0] == "v") {
      intern(toks[1]);
      continue;
    }
    if (toks[0] == toks[1]) {
      throw ParseError(line_no, "self-loop on '" + toks[0] + "' is not allowed");
    }
    Vertex u = intern(toks[0]);
    Vertex v = intern(toks[1]);
    edges.emplace_back(u, v);
  }
  out.graph = Graph(out.labels.size(), edges);
  return out;
}

std::string serialize_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  for (const auto& label : g.labels) out << "v " << label << '\n';
  for (auto [u, v] : g.graph.edges()) out << g.labels[u] << ' ' << g.labels[v] << '\n';
  return out.str();
}

VertexSet parse_vertex_set(std::string_view text, const LabeledGraph& g) {
  std::vector<Vertex> ids;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    for (const auto& tok : tokens(line)) {
      if (tok.front() == '#') break;
      auto id = g.find(tok);
      if (!id) throw ParseError(line_no, "unknown vertex label '" + tok + "'");
      ids.push_back(*id);
    }
  }
  return VertexSet(std::move(ids));
}

std::string serialize_vertex_set(const VertexSet& s, const LabeledGraph& g) {
  std::string out;
  for (Vertex v : s) {
    out += g.labels.at(v);
    out += '\n';
  }
  return out;
}

}  // namespace rulingset
