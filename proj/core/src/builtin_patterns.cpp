#include <map>
#include <mutex>
#include <stdexcept>

#include "oldset/errors.hpp"
#include "oldset/grids.hpp"

namespace oldset::grids {

namespace {

struct Builtin {
  const char* name;
  Kind kind;
  Rational expected_density;
  PeriodicPattern (*make)();
};

PeriodicPattern sq_old() {
  // Rows y = 2 and y = 4 of every five.
  return {Lattice::Sq, 1, 5, {{0, 2}, {0, 4}}, "sq-old"};
}

PeriodicPattern sq_redold() {
  // Every other row.
  return {Lattice::Sq, 1, 2, {{0, 1}}, "sq-redold"};
}

PeriodicPattern hex_old() {
  // Every other row of the brick wall.
  return {Lattice::Hex, 2, 2, {{0, 1}, {1, 1}}, "hex-old"};
}

PeriodicPattern hex_redold() {
  return {Lattice::Hex, 6, 2,
          {{2, 0}, {3, 0}, {4, 0}, {5, 0}, {0, 1}, {1, 1}, {2, 1}, {5, 1}},
          "hex-redold"};
}

PeriodicPattern tri_old() {
  // (x + 3y) mod 13 in {0, 2, 5, 7}: a tile of 13 vertices holding 4
  // detectors, translated along the index-13 sublattice x + 3y = 0 (mod 13).
  // Its smallest rectangular period is 13 x 13.
  std::vector<Coord> cells;
  for (std::int64_t y = 0; y < 13; ++y) {
    for (std::int64_t x = 0; x < 13; ++x) {
      const auto r = (x + 3 * y) % 13;
      if (r == 0 || r == 2 || r == 5 || r == 7) cells.push_back({x, y});
    }
  }
  return {Lattice::Tri, 13, 13, std::move(cells), "tri-old"};
}

PeriodicPattern tri_redold() {
  return {Lattice::Tri, 4, 4, {{2, 1}, {3, 1}, {1, 2}, {3, 2}, {1, 3}, {2, 3}}, "tri-redold"};
}

PeriodicPattern king_old() {
  return {Lattice::King, 4, 4, {{3, 0}, {2, 1}, {0, 2}, {1, 3}}, "king-old"};
}

PeriodicPattern king_redold() {
  // First hit of search_patterns(KING, RED:OLD, 6, 6, 1/3): the anti-diagonals
  // x + y = 2 (mod 3). Re-derived by the acceptance suite.
  return {Lattice::King, 3, 3, {{2, 0}, {1, 1}, {0, 2}}, "king-redold"};
}

const Builtin kBuiltins[] = {
    {"sq-old", Kind::Old, {2, 5}, sq_old},
    {"sq-redold", Kind::RedOld, {1, 2}, sq_redold},
    {"hex-old", Kind::Old, {1, 2}, hex_old},
    {"hex-redold", Kind::RedOld, {2, 3}, hex_redold},
    {"tri-old", Kind::Old, {4, 13}, tri_old},
    {"tri-redold", Kind::RedOld, {3, 8}, tri_redold},
    {"king-old", Kind::Old, {1, 4}, king_old},
    {"king-redold", Kind::RedOld, {1, 3}, king_redold},
};

std::string_view strip_prefix(std::string_view name) {
  constexpr std::string_view prefix = "builtin:";
  if (name.starts_with(prefix)) name.remove_prefix(prefix.size());
  return name;
}

const Builtin* find_builtin(std::string_view name) {
  name = strip_prefix(name);
  for (const auto& b : kBuiltins) {
    if (name == b.name) return &b;
  }
  return nullptr;
}

const std::map<std::string, PeriodicPattern, std::less<>>& validated_builtins() {
  static std::map<std::string, PeriodicPattern, std::less<>> table;
  static std::once_flag once;
  std::call_once(once, [] {
    for (const auto& b : kBuiltins) {
      auto p = b.make();
      if (density(p) != b.expected_density) {
        throw std::logic_error(std::string("builtin pattern ") + b.name + " has density " +
                               density(p).str() + ", expected " + b.expected_density.str());
      }
      if (!verify_pattern(p, b.kind).holds) {
        throw std::logic_error(std::string("builtin pattern ") + b.name + " fails " +
                               kind_name(b.kind) + " verification");
      }
      table.emplace(b.name, std::move(p));
    }
  });
  return table;
}

}  // namespace

std::vector<std::string> builtin_pattern_names() {
  std::vector<std::string> out;
  for (const auto& b : kBuiltins) out.emplace_back(b.name);
  return out;
}

std::optional<PeriodicPattern> builtin_pattern(std::string_view name) {
  const auto& table = validated_builtins();
  auto it = table.find(strip_prefix(name));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Kind builtin_pattern_kind(std::string_view name) {
  const auto* b = find_builtin(name);
  if (b == nullptr) throw InputError("unknown builtin pattern '" + std::string(name) + "'");
  return b->kind;
}

}  // namespace oldset::grids
