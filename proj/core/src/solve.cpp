#include "oldset/solve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "oldset/errors.hpp"

namespace oldset {

namespace {

// A requirement "at least k members of `candidates` are in S". Vertex
// domination constraints come first (by vertex), then pair constraints in
// lexicographic pair order.
struct Constraint {
  VertexSet candidates;
  bool is_domination;
};

class ConstraintModel {
 public:
  ConstraintModel(const Graph& g, Kind kind) : n_(g.vertex_count()), k_(fold(kind)) {
    for (Vertex v = 0; v < n_; ++v) constraints_.push_back({g.neighbors(v), true});
    // Pairs with disjoint neighbourhoods are implied by domination: each side
    // contributes at least k members to the symmetric difference.
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (g.neighbors(u).intersects(g.neighbors(v))) {
          constraints_.push_back({g.neighbors(u) ^ g.neighbors(v), false});
        }
      }
    }
    neighbors_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) neighbors_.push_back(g.neighbors(v));
  }

  std::size_t vertex_count() const { return n_; }

  // Runs R1-R3 to a fixpoint in place. Returns false on conflict.
  bool propagate(SearchState& st) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : constraints_) {
        if (c.candidates.intersection_size(st.forced_in) >= k_) continue;
        VertexSet available = c.candidates - st.forced_out;
        const auto avail = available.size();
        if (avail < k_) return false;
        if (avail == k_) {
          st.forced_in |= available;
          changed = true;
        }
      }
    }
    st.lower_bound = lower_bound(st);
    return true;
  }

  // |forced_in| plus the larger of: the worst single deficit, and the total
  // domination deficit divided by the best coverage any undecided vertex
  // offers.
  std::size_t lower_bound(const SearchState& st) const {
    std::size_t worst = 0;
    std::size_t total = 0;
    VertexSet deficient(n_);
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
      const auto have = constraints_[i].candidates.intersection_size(st.forced_in);
      if (have >= k_) continue;
      const auto deficit = k_ - have;
      worst = std::max(worst, deficit);
      if (constraints_[i].is_domination) {
        total += deficit;
        deficient.insert(i);
      }
    }
    std::size_t extra = worst;
    if (total > 0) {
      VertexSet undecided = VertexSet::full(n_) - st.forced_in - st.forced_out;
      std::size_t best_cover = 0;
      undecided.for_each([&](Vertex w) {
        best_cover = std::max(best_cover, neighbors_[w].intersection_size(deficient));
      });
      if (best_cover > 0) extra = std::max(extra, (total + best_cover - 1) / best_cover);
    }
    return st.forced_in.size() + extra;
  }

  // Tightest unsatisfied constraint (fewest undecided candidates, first in
  // order on ties); branch on its lowest undecided vertex. nullopt when all
  // constraints hold.
  std::optional<Vertex> branch_vertex(const SearchState& st) const {
    const VertexSet decided = st.forced_in | st.forced_out;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const Constraint* pick = nullptr;
    for (const auto& c : constraints_) {
      if (c.candidates.intersection_size(st.forced_in) >= k_) continue;
      const auto open = c.candidates.size() - c.candidates.intersection_size(decided);
      if (open < best) {
        best = open;
        pick = &c;
      }
    }
    if (pick == nullptr) return std::nullopt;
    return (pick->candidates - decided).first();
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Constraint> constraints_;
  std::vector<VertexSet> neighbors_;
};

class BranchAndBound {
 public:
  BranchAndBound(const ConstraintModel& model, const SolveOptions& options)
      : model_(model), options_(options) {}

  void run(SearchState root) { dfs(std::move(root)); }

  SolveResult result() && {
    SolveResult r;
    r.nodes = nodes_;
    if (best_ == kNone) {
      r.witness = VertexSet(model_.vertex_count());
      if (options_.enumerate) r.all_minimum_sets.emplace();
      return r;
    }
    r.value = best_;
    r.witness = std::move(witness_);
    if (options_.enumerate) {
      std::sort(optima_.begin(), optima_.end(), lex_less);
      r.all_minimum_sets = std::move(optima_);
    }
    return r;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  void dfs(SearchState st) {
    if (++nodes_ > options_.node_budget) {
      throw BudgetExceeded("node budget of " + std::to_string(options_.node_budget) +
                           " exhausted");
    }
    if (!model_.propagate(st)) return;
    // Ties with the incumbent are still explored: they may hold a
    // lexicographically smaller optimum or, when enumerating, another one.
    if (best_ != kNone && st.lower_bound > best_) return;

    auto v = model_.branch_vertex(st);
    if (!v) {
      record(st.forced_in);
      return;
    }
    SearchState with = st;
    with.forced_in.insert(*v);
    dfs(std::move(with));
    st.forced_out.insert(*v);
    dfs(std::move(st));
  }

  void record(const VertexSet& s) {
    const auto size = s.size();
    if (size < best_) {
      best_ = size;
      witness_ = s;
      optima_.clear();
      if (options_.enumerate) optima_.push_back(s);
    } else if (size == best_) {
      if (lex_less(s, witness_)) witness_ = s;
      if (options_.enumerate) optima_.push_back(s);
    }
  }

  const ConstraintModel& model_;
  const SolveOptions& options_;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = kNone;
  VertexSet witness_;
  std::vector<VertexSet> optima_;
};

VertexSet or_empty(const VertexSet& s, std::size_t n) {
  if (s.universe() == 0) return VertexSet(n);
  if (s.universe() != n) throw InputError("forced set belongs to a different graph");
  return s;
}

}  // namespace

bool feasibility_check(const Graph& g, Kind kind) {
  return verify_kind(g, VertexSet::full(g.vertex_count()), kind).holds;
}

SolveResult min_set_bruteforce(const Graph& g, Kind kind) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteforceMaxVertices) {
    throw InputError("brute force refuses graphs with more than " +
                     std::to_string(kBruteforceMaxVertices) + " vertices");
  }
  SolveResult r;
  r.witness = VertexSet(n);
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<Vertex> pick(size);
    std::iota(pick.begin(), pick.end(), Vertex{0});
    while (true) {
      ++r.nodes;
      VertexSet s(n, pick);
      if (verify_kind(g, s, kind)) {
        r.value = size;
        r.witness = std::move(s);
        return r;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return r;
}

SolveResult min_set(const Graph& g, Kind kind, const SolveOptions& options) {
  const std::size_t n = g.vertex_count();
  SearchState root{or_empty(options.forced_in, n), or_empty(options.forced_out, n), 0};
  if (root.forced_in.intersects(root.forced_out)) {
    throw InputError("a vertex cannot be forced both in and out");
  }
  if (!feasibility_check(g, kind)) {
    SolveResult r;
    r.witness = VertexSet(n);
    if (options.enumerate) r.all_minimum_sets.emplace();
    return r;
  }
  ConstraintModel model(g, kind);
  BranchAndBound search(model, options);
  search.run(std::move(root));
  return std::move(search).result();
}

std::optional<SearchState> propagate(const Graph& g, Kind kind, SearchState state) {
  const std::size_t n = g.vertex_count();
  state.forced_in = or_empty(state.forced_in, n);
  state.forced_out = or_empty(state.forced_out, n);
  if (state.forced_in.intersects(state.forced_out)) return std::nullopt;
  ConstraintModel model(g, kind);
  if (!model.propagate(state)) return std::nullopt;
  return state;
}

bool is_in_every_optimal_set(const Graph& g, Kind kind, Vertex v, std::uint64_t node_budget) {
  if (v >= g.vertex_count()) throw InputError("vertex index out of range");
  SolveOptions opts;
  opts.node_budget = node_budget;
  const auto base = min_set(g, kind, opts);
  if (!base.value) throw InputError(std::string("graph has no ") + kind_name(kind) + " set");
  opts.forced_out = VertexSet(g.vertex_count(), {v});
  const auto without = min_set(g, kind, opts);
  return !without.value || *without.value > *base.value;
}

}  // namespace oldset
