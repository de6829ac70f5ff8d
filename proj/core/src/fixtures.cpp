#include "oldset/fixtures.hpp"

#include <stdexcept>

namespace oldset::fixtures {

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

namespace {

// 1-based names to 0-based indices.
constexpr Vertex v(int i) { return static_cast<Vertex>(i - 1); }

VertexSet named(std::size_t n, std::initializer_list<int> ids) {
  VertexSet s(n);
  for (int i : ids) s.insert(v(i));
  return s;
}

void expect(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("g11 fixture violates: ") + what);
}

}  // namespace

Graph g11() {
  std::vector<Edge> edges = {
      {v(1), v(2)},  {v(1), v(3)},  {v(2), v(3)},   // triangle A
      {v(3), v(4)},  {v(4), v(7)},                   // A - v4 - B
      {v(5), v(6)},  {v(5), v(7)},  {v(6), v(7)},   // triangle B
      {v(7), v(8)},  {v(8), v(9)},                   // B - v8 - C
      {v(9), v(10)}, {v(9), v(11)}, {v(10), v(11)}, // triangle C
  };
  std::vector<std::string> labels;
  for (int i = 1; i <= 11; ++i) labels.push_back("v" + std::to_string(i));
  Graph g = build_graph(11, edges, std::move(labels));

  const std::size_t n = g.vertex_count();
  auto is_triangle = [&](int a, int b, int c) {
    return g.adjacent(v(a), v(b)) && g.adjacent(v(a), v(c)) && g.adjacent(v(b), v(c));
  };
  expect(is_triangle(1, 2, 3), "{v1,v2,v3} is a triangle");
  expect(is_triangle(5, 6, 7), "{v5,v6,v7} is a triangle");
  expect(is_triangle(9, 10, 11), "{v9,v10,v11} is a triangle");

  const VertexSet s = named(n, {2, 3, 6, 7, 9, 10});
  auto restricted = [&](int i) { return g.neighbors(v(i)) & s; };
  expect(restricted(1) == named(n, {2, 3}), "N(v1)&S = {v2,v3}");
  expect(restricted(2) == named(n, {3}), "N(v2)&S = {v3}");
  expect(restricted(3) == named(n, {2}), "N(v3)&S = {v2}");
  expect(restricted(4) == named(n, {3, 7}), "N(v4)&S = {v3,v7}");
  expect(restricted(8) == named(n, {7, 9}), "N(v8)&S = {v7,v9}");
  expect(g.neighbors(v(2)) == named(n, {1, 3}), "N(v2) = {v1,v3}");
  return g;
}

VertexSet g11_old_set(const Graph& g11) {
  return named(g11.vertex_count(), {2, 3, 6, 7, 9, 10});
}

VertexSet g11_redold_set(const Graph& g11) {
  return named(g11.vertex_count(), {1, 2, 3, 5, 6, 7, 9, 10, 11});
}

std::optional<Graph> builtin_graph(std::string_view name) {
  constexpr std::string_view prefix = "builtin:";
  if (name.starts_with(prefix)) name.remove_prefix(prefix.size());
  if (name == "g11") return g11();
  if (name == "c4") return cycle(4);
  if (name == "c5") return cycle(5);
  if (name == "k4") return complete(4);
  if (name == "p3") return path(3);
  return std::nullopt;
}

std::vector<std::string> builtin_graph_names() { return {"g11", "c4", "c5", "k4", "p3"}; }

}  // namespace oldset::fixtures
