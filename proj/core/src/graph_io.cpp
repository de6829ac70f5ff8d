#include "oldset/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "oldset/errors.hpp"

namespace oldset {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_custom_labels()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw InputError("graph JSON needs \"n\" and \"edges\"");
    }
    auto n = j.at("n").get<long long>();
    if (n < 0) throw InputError("negative vertex count");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
      auto u = e[0].get<long long>();
      auto v = e[1].get<long long>();
      if (u < 0 || v < 0) throw InputError("negative vertex index");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return build_graph(static_cast<std::size_t>(n), edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad graph JSON: ") + e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("empty edge list");

  auto read_pair = [](const std::string& l, long long& a, long long& b) {
    std::istringstream ls(l);
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest)) throw InputError("expected two integers: '" + l + "'");
  };

  long long n = 0;
  long long m = 0;
  read_pair(lines[0], n, m);
  if (n < 0 || m < 0) throw InputError("negative count in edge-list header");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long u = 0;
    long long v = 0;
    read_pair(lines[i], u, v);
    if (u < 0 || v < 0) throw InputError("negative vertex index");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("bad graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace oldset
