#pragma once

// Test-only oracles. They work on plain std::set adjacency and never call the
// library's verifiers, so agreement between the two is meaningful.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "oldset/graph.hpp"

namespace oldset::testing {

using NaiveSet = std::set<std::size_t>;

struct NaiveGraph {
  std::vector<NaiveSet> adj;

  explicit NaiveGraph(const Graph& g) : adj(g.vertex_count()) {
    for (auto [u, v] : g.edges()) {
      adj[u].insert(v);
      adj[v].insert(u);
    }
  }

  NaiveSet restricted(std::size_t v, const NaiveSet& s) const {
    NaiveSet out;
    for (auto w : adj[v]) {
      if (s.count(w) != 0) out.insert(w);
    }
    return out;
  }
};

inline NaiveSet to_naive(const VertexSet& s) {
  auto m = s.members();
  return {m.begin(), m.end()};
}

/// OLD by the definition: open dominating, and N(u)&S != N(v)&S for u != v.
inline bool naive_is_old(const NaiveGraph& g, const NaiveSet& s) {
  const auto n = g.adj.size();
  std::vector<NaiveSet> r;
  for (std::size_t v = 0; v < n; ++v) {
    r.push_back(g.restricted(v, s));
    if (r.back().empty()) return false;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (r[u] == r[v]) return false;
    }
  }
  return true;
}

/// RED:OLD by the definition: open dominating, and S - {w} is OLD for all w.
inline bool naive_is_red_old(const NaiveGraph& g, const NaiveSet& s) {
  for (std::size_t v = 0; v < g.adj.size(); ++v) {
    if (g.restricted(v, s).empty()) return false;
  }
  for (auto w : s) {
    NaiveSet reduced = s;
    reduced.erase(w);
    if (!naive_is_old(g, reduced)) return false;
  }
  return true;
}

/// Minimum cardinality by scanning all 2^n subsets; -1 when none exists.
template <typename Pred>
int naive_minimum(const NaiveGraph& g, Pred accept) {
  const auto n = g.adj.size();
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    NaiveSet s;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.insert(v);
    }
    if ((best < 0 || static_cast<int>(s.size()) < best) && accept(g, s)) {
      best = static_cast<int>(s.size());
    }
  }
  return best;
}

/// G(n, p) with a fixed seed.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

/// Every labelled graph on n vertices, indexed by the bitmask of its edges.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

inline std::uint64_t graph_count(std::size_t n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

inline VertexSet subset_from_mask(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.insert(v);
  }
  return s;
}

}  // namespace oldset::testing
