#include "oldset/grids.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "oldset/errors.hpp"

namespace oldset::grids {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

std::size_t symmetric_difference_in(const PeriodicPattern& p, const Neighbors& a,
                                    const Neighbors& b) {
  auto in = [](const Neighbors& ns, Coord c) {
    return std::find(ns.begin(), ns.end(), c) != ns.end();
  };
  std::size_t count = 0;
  for (auto w : a) count += p.contains(w) && !in(b, w);
  for (auto w : b) count += p.contains(w) && !in(a, w);
  return count;
}

}  // namespace

const char* lattice_name(Lattice l) {
  switch (l) {
    case Lattice::Sq: return "sq";
    case Lattice::Hex: return "hex";
    case Lattice::Tri: return "tri";
    case Lattice::King: return "king";
  }
  return "?";
}

Lattice parse_lattice(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sq") return Lattice::Sq;
  if (lower == "hex") return Lattice::Hex;
  if (lower == "tri") return Lattice::Tri;
  if (lower == "king") return Lattice::King;
  throw InputError("unknown lattice '" + std::string(name) + "' (sq, hex, tri, king)");
}

std::size_t lattice_degree(Lattice l) {
  switch (l) {
    case Lattice::Sq: return 4;
    case Lattice::Hex: return 3;
    case Lattice::Tri: return 6;
    case Lattice::King: return 8;
  }
  return 0;
}

Neighbors lattice_neighbors(Lattice l, Coord c) {
  Neighbors ns;
  auto add = [&](std::int64_t dx, std::int64_t dy) { ns.items[ns.count++] = {c.x + dx, c.y + dy}; };
  switch (l) {
    case Lattice::Sq:
      add(1, 0), add(-1, 0), add(0, 1), add(0, -1);
      break;
    case Lattice::Hex:
      add(1, 0), add(-1, 0);
      if (mod(c.x + c.y, 2) == 0) {
        add(0, 1);
      } else {
        add(0, -1);
      }
      break;
    case Lattice::Tri:
      add(1, 0), add(-1, 0), add(0, 1), add(0, -1), add(1, -1), add(-1, 1);
      break;
    case Lattice::King:
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
          if (dx != 0 || dy != 0) add(dx, dy);
        }
      }
      break;
  }
  return ns;
}

std::vector<Coord> distance_two_ball(Lattice l, Coord c) {
  std::vector<Coord> out;
  for (auto w : lattice_neighbors(l, c)) {
    out.push_back(w);
    for (auto z : lattice_neighbors(l, w)) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), c), out.end());
  return out;
}

PeriodicPattern::PeriodicPattern(Lattice lattice, std::int64_t px, std::int64_t py,
                                 std::vector<Coord> cells, std::string name)
    : lattice_(lattice), px_(px), py_(py), cells_(std::move(cells)), name_(std::move(name)) {
  if (px_ <= 0 || py_ <= 0) throw InputError("pattern period must be positive");
  if (lattice_ == Lattice::Hex && (px_ % 2 != 0 || py_ % 2 != 0)) {
    throw InputError("HEX pattern periods must be even");
  }
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  mask_.assign(static_cast<std::size_t>(px_ * py_), false);
  for (auto c : cells_) {
    if (c.x < 0 || c.x >= px_ || c.y < 0 || c.y >= py_) {
      throw InputError("pattern cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                       ") lies outside the period");
    }
    mask_[static_cast<std::size_t>(c.y * px_ + c.x)] = true;
  }
}

bool PeriodicPattern::contains(Coord c) const {
  return mask_[static_cast<std::size_t>(mod(c.y, py_) * px_ + mod(c.x, px_))];
}

Rational density(const PeriodicPattern& p) {
  return {static_cast<std::int64_t>(p.cells().size()), p.px() * p.py()};
}

DensityReport verify_pattern(const PeriodicPattern& p, Kind kind) {
  const auto k = fold(kind);
  DensityReport report{true, kind, density(p), {}};
  for (std::int64_t y = 0; y < p.py(); ++y) {
    for (std::int64_t x = 0; x < p.px(); ++x) {
      const Coord u{x, y};
      const auto nu = lattice_neighbors(p.lattice(), u);
      const auto dom = static_cast<std::size_t>(
          std::count_if(nu.begin(), nu.end(), [&](Coord w) { return p.contains(w); }));
      if (dom < k) {
        report.holds = false;
        report.witness = GridUnderDominated{u, dom};
        return report;
      }
    }
  }
  for (std::int64_t y = 0; y < p.py(); ++y) {
    for (std::int64_t x = 0; x < p.px(); ++x) {
      const Coord u{x, y};
      const auto nu = lattice_neighbors(p.lattice(), u);
      for (auto v : distance_two_ball(p.lattice(), u)) {
        const auto c = symmetric_difference_in(p, nu, lattice_neighbors(p.lattice(), v));
        if (c < k) {
          report.holds = false;
          report.witness = GridUnderDistinguished{u, v, c};
          return report;
        }
      }
    }
  }
  return report;
}

Graph build_torus(Lattice l, std::int64_t width, std::int64_t height) {
  if (width < 5 || height < 5) throw InputError("torus sides must be at least 5");
  if (l == Lattice::Hex && (width % 2 != 0 || height % 2 != 0)) {
    throw InputError("HEX torus sides must be even");
  }
  const auto n = static_cast<std::size_t>(width * height);
  auto index = [&](Coord c) {
    return static_cast<Vertex>(mod(c.y, height) * width + mod(c.x, width));
  };
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::int64_t y = 0; y < height; ++y) {
    for (std::int64_t x = 0; x < width; ++x) {
      labels.push_back(std::to_string(x) + "," + std::to_string(y));
      const Vertex u = index({x, y});
      for (auto w : lattice_neighbors(l, {x, y})) {
        const Vertex v = index(w);
        if (u < v) edges.emplace_back(u, v);
      }
    }
  }
  auto g = build_graph(n, edges, std::move(labels));
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != lattice_degree(l)) throw std::logic_error("torus is not regular");
  }
  return g;
}

VertexSet restrict_pattern_to_torus(const PeriodicPattern& p, std::int64_t width,
                                    std::int64_t height) {
  if (width < 6 || height < 6) throw InputError("torus sides must be at least 6");
  if (width % p.px() != 0 || height % p.py() != 0) {
    throw InputError("torus sides must be multiples of the pattern period");
  }
  VertexSet s(static_cast<std::size_t>(width * height));
  for (std::int64_t y = 0; y < height; ++y) {
    for (std::int64_t x = 0; x < width; ++x) {
      if (p.contains({x, y})) s.insert(static_cast<Vertex>(y * width + x));
    }
  }
  return s;
}

std::pair<std::int64_t, std::int64_t> cross_check_dimensions(const PeriodicPattern& p) {
  auto side = [](std::int64_t period) {
    const auto want = std::max<std::int64_t>(3 * period, 6);
    return (want + period - 1) / period * period;
  };
  return {side(p.px()), side(p.py())};
}

TorusCrossCheck torus_cross_check(const PeriodicPattern& p, Kind kind, std::int64_t width,
                                  std::int64_t height) {
  TorusCrossCheck r;
  r.width = width;
  r.height = height;
  r.local_holds = verify_pattern(p, kind).holds;
  const auto g = build_torus(p.lattice(), width, height);
  r.torus_holds = verify_kind(g, restrict_pattern_to_torus(p, width, height), kind).holds;
  return r;
}

TorusCrossCheck torus_cross_check(const PeriodicPattern& p, Kind kind) {
  auto [w, h] = cross_check_dimensions(p);
  return torus_cross_check(p, kind, w, h);
}

namespace {

// Every condition on a periodic set is "sum of coef * [cell in S] >= k" over
// the cells of one period. The search keeps, per condition, the largest sum
// still reachable and backtracks when it drops below k.
class PatternSearch {
 public:
  PatternSearch(Lattice l, Kind kind, std::int64_t px, std::int64_t py, std::size_t max_cells)
      : lattice_(l), k_(fold(kind)), px_(px), py_(py), max_cells_(max_cells),
        cell_terms_(static_cast<std::size_t>(px * py)) {
    for (std::int64_t y = 0; y < py; ++y) {
      for (std::int64_t x = 0; x < px; ++x) {
        const Coord u{x, y};
        const auto nu = lattice_neighbors(l, u);
        add_condition(std::vector<Coord>(nu.begin(), nu.end()));
        for (auto v : distance_two_ball(l, u)) {
          const auto nv = lattice_neighbors(l, v);
          std::vector<Coord> diff;
          for (auto w : nu) {
            if (std::find(nv.begin(), nv.end(), w) == nv.end()) diff.push_back(w);
          }
          for (auto w : nv) {
            if (std::find(nu.begin(), nu.end(), w) == nu.end()) diff.push_back(w);
          }
          add_condition(diff);
        }
      }
    }
  }

  std::optional<std::vector<Coord>> run() {
    for (auto r : reachable_) {
      if (r < k_) return std::nullopt;
    }
    chosen_.clear();
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  std::size_t cell(Coord c) const {
    return static_cast<std::size_t>(mod(c.y, py_) * px_ + mod(c.x, px_));
  }

  void add_condition(const std::vector<Coord>& coords) {
    std::map<std::size_t, std::size_t> coef;
    for (auto c : coords) ++coef[cell(c)];
    const auto id = reachable_.size();
    std::size_t total = 0;
    for (auto [c, m] : coef) {
      cell_terms_[c].push_back({id, m});
      total += m;
    }
    reachable_.push_back(total);
  }

  bool exclude(std::size_t c) {
    bool ok = true;
    for (auto [id, m] : cell_terms_[c]) {
      reachable_[id] -= m;
      if (reachable_[id] < k_) ok = false;
    }
    return ok;
  }

  void restore(std::size_t c) {
    for (auto [id, m] : cell_terms_[c]) reachable_[id] += m;
  }

  bool dfs(std::size_t c) {
    if (c == cell_terms_.size()) return true;
    if (exclude(c) && dfs(c + 1)) return true;
    restore(c);
    if (chosen_.size() < max_cells_) {
      chosen_.push_back({static_cast<std::int64_t>(c) % px_, static_cast<std::int64_t>(c) / px_});
      if (dfs(c + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  struct Term {
    std::size_t condition;
    std::size_t coef;
  };

  Lattice lattice_;
  std::size_t k_;
  std::int64_t px_;
  std::int64_t py_;
  std::size_t max_cells_;
  std::vector<std::vector<Term>> cell_terms_;
  std::vector<std::size_t> reachable_;
  std::vector<Coord> chosen_;
};

}  // namespace

std::optional<PeriodicPattern> search_patterns(Lattice l, Kind kind, std::int64_t max_px,
                                               std::int64_t max_py, Rational target) {
  std::vector<std::pair<std::int64_t, std::int64_t>> periods;
  for (std::int64_t px = 1; px <= max_px; ++px) {
    for (std::int64_t py = 1; py <= max_py; ++py) {
      if (l == Lattice::Hex && (px % 2 != 0 || py % 2 != 0)) continue;
      periods.emplace_back(px, py);
    }
  }
  std::stable_sort(periods.begin(), periods.end(), [](auto a, auto b) {
    return std::pair(a.first * a.second, a.first) < std::pair(b.first * b.second, b.first);
  });

  const auto k = static_cast<std::int64_t>(fold(kind));
  const auto deg = static_cast<std::int64_t>(lattice_degree(l));
  for (auto [px, py] : periods) {
    const auto area = px * py;
    const auto max_cells = area * target.num() / target.den();
    // Each member dominates deg vertices, each vertex needs k dominators.
    const auto min_cells = (k * area + deg - 1) / deg;
    if (min_cells > max_cells) continue;
    PatternSearch search(l, kind, px, py, static_cast<std::size_t>(max_cells));
    if (auto cells = search.run()) {
      PeriodicPattern p(l, px, py, std::move(*cells));
      if (!verify_pattern(p, kind).holds) throw std::logic_error("search produced a failing pattern");
      return p;
    }
  }
  return std::nullopt;
}

nlohmann::json pattern_to_json(const PeriodicPattern& p) {
  auto cells = nlohmann::json::array();
  for (auto c : p.cells()) cells.push_back({c.x, c.y});
  nlohmann::json j = {{"lattice", lattice_name(p.lattice())},
                      {"period", {p.px(), p.py()}},
                      {"cells", std::move(cells)}};
  if (!p.name().empty()) j["name"] = p.name();
  return j;
}

PeriodicPattern pattern_from_json(const nlohmann::json& j) {
  try {
    const auto lattice = parse_lattice(j.at("lattice").get<std::string>());
    const auto& period = j.at("period");
    if (!period.is_array() || period.size() != 2) throw InputError("period must be [px, py]");
    std::vector<Coord> cells;
    for (const auto& c : j.at("cells")) {
      if (!c.is_array() || c.size() != 2) throw InputError("cell must be [x, y]");
      cells.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>()});
    }
    return PeriodicPattern(lattice, period[0].get<std::int64_t>(), period[1].get<std::int64_t>(),
                           std::move(cells), j.value("name", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad pattern JSON: ") + e.what());
  }
}

}  // namespace oldset::grids
