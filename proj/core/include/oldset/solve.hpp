#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "oldset/graph.hpp"
#include "oldset/verify.hpp"

namespace oldset {

struct SolveResult {
  /// Minimum cardinality; nullopt when no set of this kind exists.
  std::optional<std::size_t> value;
  /// Lexicographically smallest minimum set (empty when infeasible).
  VertexSet witness;
  /// Every minimum set, in lexicographic order, when enumeration was requested.
  std::optional<std::vector<VertexSet>> all_minimum_sets;
  std::uint64_t nodes = 0;

  bool feasible() const { return value.has_value(); }
};

/// Branch bookkeeping: vertices decided in or out of the solution.
struct SearchState {
  VertexSet forced_in;
  VertexSet forced_out;
  std::size_t lower_bound = 0;

  static SearchState empty(std::size_t n) { return {VertexSet(n), VertexSet(n), 0}; }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SolveOptions {
  bool enumerate = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Restricts the search to sets containing forced_in and avoiding
  /// forced_out. Either may be left default-constructed.
  VertexSet forced_in;
  VertexSet forced_out;
};

/// True iff S = V(G) satisfies the kind's conditions; by monotonicity this
/// is exactly when some set of that kind exists.
bool feasibility_check(const Graph& g, Kind kind);

inline constexpr std::size_t kBruteforceMaxVertices = 20;

/// Subsets by increasing size, lexicographic within a size; returns the
/// first accepted one. Refuses graphs with more than 20 vertices.
SolveResult min_set_bruteforce(const Graph& g, Kind kind);

/// Exact branch and bound. Throws BudgetExceeded when the node budget runs
/// out; never returns a non-optimal answer.
SolveResult min_set(const Graph& g, Kind kind, const SolveOptions& options = {});

/// Fixpoint of the forcing rules; nullopt means the branch is infeasible.
///   R1  a vertex with exactly k available neighbours forces all of them in;
///   R2  a pair whose available symmetric difference has exactly k members
///       forces all of them in;
///   R3  fewer than k available dominators or distinguishers is a conflict.
/// The returned lower_bound is valid for every completion of the state.
std::optional<SearchState> propagate(const Graph& g, Kind kind, SearchState state);

/// True iff every minimum set of this kind contains v.
bool is_in_every_optimal_set(const Graph& g, Kind kind, Vertex v,
                             std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace oldset
