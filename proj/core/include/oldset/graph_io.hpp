#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "oldset/graph.hpp"

namespace oldset {

// Graph JSON: {"n": int, "edges": [[u,v],...], "labels": [str,...]}.
// "labels" is optional on input and emitted only for custom-labelled graphs.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Plain edge list: first line "n m", then m lines "u v". Lines starting with
// '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Accepts either format; JSON is recognised by a leading '{'.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace oldset
