#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "oldset/graph.hpp"
#include "oldset/rational.hpp"
#include "oldset/verify.hpp"

namespace oldset::grids {

enum class Lattice { Sq, Hex, Tri, King };

const char* lattice_name(Lattice l);  // "sq", "hex", "tri", "king"
Lattice parse_lattice(std::string_view name);
std::size_t lattice_degree(Lattice l);

struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  /// Row-major: by y, then x.
  friend constexpr std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// Neighbours of a lattice point, as a fixed-capacity list.
struct Neighbors {
  std::array<Coord, 8> items{};
  std::size_t count = 0;
  const Coord* begin() const { return items.data(); }
  const Coord* end() const { return items.data() + count; }
};

///   SQ   (+-1,0), (0,+-1)
///   HEX  (+-1,0), plus (0,+1) when x+y is even and (0,-1) when odd
///   TRI  (+-1,0), (0,+-1), (+1,-1), (-1,+1)
///   KING all eight surrounding points
Neighbors lattice_neighbors(Lattice l, Coord c);

/// Points at graph distance 1 or 2 from c, sorted row-major.
std::vector<Coord> distance_two_ball(Lattice l, Coord c);

/// A doubly periodic vertex set: (x, y) is a member iff (x mod px, y mod py)
/// is one of `cells`.
class PeriodicPattern {
 public:
  /// Throws InputError if a cell lies outside [0,px)x[0,py), a period is not
  /// positive, or a HEX period is odd.
  PeriodicPattern(Lattice lattice, std::int64_t px, std::int64_t py, std::vector<Coord> cells,
                  std::string name = {});

  Lattice lattice() const { return lattice_; }
  std::int64_t px() const { return px_; }
  std::int64_t py() const { return py_; }
  const std::vector<Coord>& cells() const { return cells_; }
  const std::string& name() const { return name_; }

  bool contains(Coord c) const;

 private:
  Lattice lattice_;
  std::int64_t px_;
  std::int64_t py_;
  std::vector<Coord> cells_;  // sorted row-major, unique
  std::vector<bool> mask_;    // y * px + x
  std::string name_;
};

/// |cells| / (px * py) in lowest terms.
Rational density(const PeriodicPattern& p);

struct GridUnderDominated {
  Coord vertex;
  std::size_t count;
};
struct GridUnderDistinguished {
  Coord u;
  Coord v;
  std::size_t count;
};
using GridWitness = std::variant<std::monostate, GridUnderDominated, GridUnderDistinguished>;

struct DensityReport {
  bool holds = false;
  Kind kind = Kind::Old;
  Rational density;
  GridWitness witness;
};

/// Decides the kind's conditions on the whole infinite lattice by checking
/// every vertex of one period and every partner within distance 2; farther
/// pairs have disjoint neighbourhoods and pass by domination alone.
DensityReport verify_pattern(const PeriodicPattern& p, Kind kind);

/// width x height torus of the lattice; vertex (x, y) has index y*width + x
/// and label "x,y". Needs both sides >= 5, and even for HEX.
Graph build_torus(Lattice l, std::int64_t width, std::int64_t height);

/// The pattern's vertices on a width x height torus. Sides must be multiples
/// of the period and at least 6.
VertexSet restrict_pattern_to_torus(const PeriodicPattern& p, std::int64_t width,
                                    std::int64_t height);

/// Smallest multiple of the period that is at least max(3 * period, 6).
std::pair<std::int64_t, std::int64_t> cross_check_dimensions(const PeriodicPattern& p);

struct TorusCrossCheck {
  std::int64_t width = 0;
  std::int64_t height = 0;
  bool local_holds = false;
  bool torus_holds = false;
  bool agree() const { return local_holds == torus_holds; }
};

/// Runs verify_pattern and the finite verifier on the restricted torus.
TorusCrossCheck torus_cross_check(const PeriodicPattern& p, Kind kind, std::int64_t width,
                                  std::int64_t height);
TorusCrossCheck torus_cross_check(const PeriodicPattern& p, Kind kind);

/// Exhaustive search over rectangular periods up to max_px x max_py, by
/// increasing area then px; within a period the cell vector is searched in
/// lexicographic order (cells row-major, absent before present). Returns the
/// first verifying pattern whose density is at most `target`.
std::optional<PeriodicPattern> search_patterns(Lattice l, Kind kind, std::int64_t max_px,
                                               std::int64_t max_py, Rational target);

nlohmann::json pattern_to_json(const PeriodicPattern& p);
PeriodicPattern pattern_from_json(const nlohmann::json& j);

/// Builtin names without the "builtin:" prefix, e.g. "sq-old", "king-redold".
std::vector<std::string> builtin_pattern_names();
/// Resolves a builtin (prefix optional). Every builtin is verified on first
/// use; a failing table raises std::logic_error.
std::optional<PeriodicPattern> builtin_pattern(std::string_view name);
/// The kind a builtin was built for (its name suffix).
Kind builtin_pattern_kind(std::string_view name);

}  // namespace oldset::grids
