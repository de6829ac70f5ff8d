#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oldset/graph.hpp"

namespace oldset::fixtures {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);

/// The 11-vertex example graph with three triangles {v1,v2,v3}, {v5,v6,v7},
/// {v9,v10,v11} joined through v4 and v8. Labels are "v1".."v11".
///
/// Construction checks the neighbourhood identities the graph is known by
/// and throws std::logic_error if any of them is violated.
Graph g11();

/// {v2,v3,v6,v7,v9,v10}: a minimum OLD set of g11().
VertexSet g11_old_set(const Graph& g11);
/// {v1,v2,v3,v5,v6,v7,v9,v10,v11}: the unique minimum RED:OLD set of g11().
VertexSet g11_redold_set(const Graph& g11);

/// Resolves "g11", "c4", "c5", "k4", "p3" (with or without a "builtin:" prefix).
std::optional<Graph> builtin_graph(std::string_view name);
std::vector<std::string> builtin_graph_names();

}  // namespace oldset::fixtures
