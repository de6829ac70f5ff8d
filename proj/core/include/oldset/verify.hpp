#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "oldset/graph.hpp"

namespace oldset {

enum class Kind { Old, RedOld };

/// Fold k of the domination/distinguishing conditions: 1 for OLD, 2 for RED:OLD.
constexpr std::size_t fold(Kind kind) { return kind == Kind::Old ? 1 : 2; }
const char* kind_name(Kind kind);

struct UnderDominated {
  Vertex vertex;
  std::size_t count;  // |N(vertex) & S|
  friend bool operator==(const UnderDominated&, const UnderDominated&) = default;
};

struct UnderDistinguished {
  Vertex u;
  Vertex v;
  std::size_t count;  // |(N(u) & S) ^ (N(v) & S)|
  friend bool operator==(const UnderDistinguished&, const UnderDistinguished&) = default;
};

using Witness = std::variant<std::monostate, UnderDominated, UnderDistinguished>;

struct VerificationReport {
  bool holds = true;
  Witness witness;

  explicit operator bool() const { return holds; }

  static VerificationReport ok() { return {}; }
  static VerificationReport fail(Witness w) { return {false, w}; }
};

/// |N(v) & S|.
std::size_t domination_count(const Graph& g, const VertexSet& s, Vertex v);

/// |(N(u) & S) ^ (N(v) & S)|. Requires u != v.
std::size_t distinguishing_count(const Graph& g, const VertexSet& s, Vertex u, Vertex v);

/// Every vertex has at least k neighbours in S. The witness is the lowest
/// failing vertex.
VerificationReport is_open_dominating(const Graph& g, const VertexSet& s, std::size_t k);

/// k-fold domination plus k-distinguishing of every pair. Failures are
/// reported in index order: first the lowest under-dominated vertex, then the
/// lexicographically first pair (u < v).
VerificationReport check_fold(const Graph& g, const VertexSet& s, std::size_t k);

VerificationReport is_old(const Graph& g, const VertexSet& s);
VerificationReport is_red_old(const Graph& g, const VertexSet& s);
VerificationReport verify_kind(const Graph& g, const VertexSet& s, Kind kind);

/// Open domination and N(u) & S != N(v) & S for all distinct u, v.
bool is_old_by_restricted_neighborhoods(const Graph& g, const VertexSet& s);

/// Open domination plus: S - {v} is OLD for every v in S. Deliberately
/// avoids the 2-fold characterisation so the two can be compared.
VerificationReport is_red_old_definitional(const Graph& g, const VertexSet& s);

/// True iff the subsets cover 0..universe-1 and every distinct pair is split
/// by some subset holding exactly one of the two.
bool is_distinguishing_collection(std::size_t universe, const std::vector<VertexSet>& subsets);

/// Collection {{w}, N(w) : w in S} is distinguishing.
bool is_locating_dominating(const Graph& g, const VertexSet& s);
/// Collection {N[w] : w in S} is distinguishing.
bool is_identifying_code(const Graph& g, const VertexSet& s);
/// Collection {N(w) : w in S} is distinguishing.
bool is_old_by_collection(const Graph& g, const VertexSet& s);

}  // namespace oldset
