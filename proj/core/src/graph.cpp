#include "oldset/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "oldset/errors.hpp"

namespace oldset {

Graph build_graph(std::size_t n, const std::vector<Edge>& edges,
                  std::vector<std::string> labels) {
  Graph g;
  g.adjacency_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!g.adjacency_[u].contains(v)) {
      g.adjacency_[u].insert(v);
      g.adjacency_[v].insert(u);
      ++g.edge_count_;
    }
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  } else {
    if (labels.size() != n) {
      throw InputError("expected " + std::to_string(n) + " labels, got " +
                       std::to_string(labels.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw InputError("duplicate label '" + l + "'");
    }
    g.custom_labels_ = true;
  }
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    adjacency_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

VertexSet open_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw InputError("vertex index out of range");
  return g.neighbors(v);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto s = open_neighborhood(g, v);
  s.insert(v);
  return s;
}

std::string format_set(const Graph& g, const VertexSet& s) {
  std::string out;
  s.for_each([&](Vertex v) {
    if (!out.empty()) out += ',';
    out += g.label(v);
  });
  return out;
}

}  // namespace oldset
