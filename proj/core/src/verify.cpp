#include "oldset/verify.hpp"

#include "oldset/errors.hpp"

namespace oldset {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw InputError("vertex index out of range");
}

void check_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw InputError("vertex set belongs to a different graph");
}

std::vector<VertexSet> restricted_neighborhoods(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  out.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.neighbors(v) & s);
  return out;
}

std::size_t symmetric_difference_size(const VertexSet& a, const VertexSet& b) {
  return a.size() + b.size() - 2 * a.intersection_size(b);
}

}  // namespace

const char* kind_name(Kind kind) { return kind == Kind::Old ? "OLD" : "RED:OLD"; }

std::size_t domination_count(const Graph& g, const VertexSet& s, Vertex v) {
  check_set(g, s);
  check_vertex(g, v);
  return g.neighbors(v).intersection_size(s);
}

std::size_t distinguishing_count(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
  check_set(g, s);
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw InputError("distinguishing_count needs two distinct vertices");
  return symmetric_difference_size(g.neighbors(u) & s, g.neighbors(v) & s);
}

VerificationReport is_open_dominating(const Graph& g, const VertexSet& s, std::size_t k) {
  check_set(g, s);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto c = g.neighbors(v).intersection_size(s);
    if (c < k) return VerificationReport::fail(UnderDominated{v, c});
  }
  return VerificationReport::ok();
}

VerificationReport check_fold(const Graph& g, const VertexSet& s, std::size_t k) {
  if (auto dom = is_open_dominating(g, s, k); !dom) return dom;
  const auto restricted = restricted_neighborhoods(g, s);
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      auto c = symmetric_difference_size(restricted[u], restricted[v]);
      if (c < k) return VerificationReport::fail(UnderDistinguished{u, v, c});
    }
  }
  return VerificationReport::ok();
}

VerificationReport is_old(const Graph& g, const VertexSet& s) { return check_fold(g, s, 1); }

VerificationReport is_red_old(const Graph& g, const VertexSet& s) { return check_fold(g, s, 2); }

VerificationReport verify_kind(const Graph& g, const VertexSet& s, Kind kind) {
  return check_fold(g, s, fold(kind));
}

bool is_old_by_restricted_neighborhoods(const Graph& g, const VertexSet& s) {
  if (!is_open_dominating(g, s, 1)) return false;
  const auto restricted = restricted_neighborhoods(g, s);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (restricted[u] == restricted[v]) return false;
    }
  }
  return true;
}

VerificationReport is_red_old_definitional(const Graph& g, const VertexSet& s) {
  if (auto dom = is_open_dominating(g, s, 1); !dom) return dom;
  VerificationReport result;
  s.for_each([&](Vertex w) {
    if (!result.holds) return;
    VertexSet reduced = s;
    reduced.erase(w);
    if (auto r = is_old(g, reduced); !r) result = r;
  });
  return result;
}

bool is_distinguishing_collection(std::size_t universe, const std::vector<VertexSet>& subsets) {
  for (const auto& sub : subsets) {
    if (sub.universe() != universe) throw InputError("subset drawn from a different universe");
  }
  // Signature of element x: which subsets contain it. Covered means a
  // non-empty signature; separated means pairwise different signatures.
  std::vector<VertexSet> signature(universe, VertexSet(subsets.size()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    subsets[i].for_each([&](Vertex x) { signature[x].insert(i); });
  }
  for (std::size_t x = 0; x < universe; ++x) {
    if (signature[x].empty()) return false;
    for (std::size_t y = x + 1; y < universe; ++y) {
      if (signature[x] == signature[y]) return false;
    }
  }
  return true;
}

bool is_locating_dominating(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  std::vector<VertexSet> c;
  s.for_each([&](Vertex w) {
    c.push_back(VertexSet(g.vertex_count(), {w}));
    c.push_back(g.neighbors(w));
  });
  return is_distinguishing_collection(g.vertex_count(), c);
}

bool is_identifying_code(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  std::vector<VertexSet> c;
  s.for_each([&](Vertex w) { c.push_back(closed_neighborhood(g, w)); });
  return is_distinguishing_collection(g.vertex_count(), c);
}

bool is_old_by_collection(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  std::vector<VertexSet> c;
  s.for_each([&](Vertex w) { c.push_back(g.neighbors(w)); });
  return is_distinguishing_collection(g.vertex_count(), c);
}

}  // namespace oldset
