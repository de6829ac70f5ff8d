#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oldset/vertex_set.hpp"

namespace oldset {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph. Immutable once built.
///
/// Vertices are 0..n-1. Every vertex has a display label; when none is
/// supplied the label is the decimal index.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// N(v). Never contains v.
  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_custom_labels() const { return custom_labels_; }
  std::optional<Vertex> find_label(std::string_view label) const;

  friend Graph build_graph(std::size_t n, const std::vector<Edge>& edges,
                           std::vector<std::string> labels);

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
  bool custom_labels_ = false;
};

/// Builds a simple graph. Duplicate pairs collapse; self-loops and
/// out-of-range endpoints are input errors. `labels` is either empty or
/// has exactly n distinct entries.
Graph build_graph(std::size_t n, const std::vector<Edge>& edges,
                  std::vector<std::string> labels = {});

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Formats a set as a comma-separated list of labels.
std::string format_set(const Graph& g, const VertexSet& s);

}  // namespace oldset
