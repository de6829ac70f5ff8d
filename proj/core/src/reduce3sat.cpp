#include "oldset/reduce3sat.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "oldset/errors.hpp"
#include "oldset/graph_io.hpp"
#include "oldset/verify.hpp"

namespace oldset::sat {

namespace {

long long parse_int(const std::string& tok) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw InputError("malformed DIMACS token '" + tok + "'");
  }
  if (used != tok.size()) throw InputError("malformed DIMACS token '" + tok + "'");
  return value;
}

// Local layout of one variable gadget. Slots 3..17 hold g_1..g_15 as five
// triangles (g_1,g_2,g_3) ... (g_13,g_14,g_15); the first vertex of each
// triangle is its attachment point, the other two have degree 2.
constexpr std::size_t kU = 0;
constexpr std::size_t kNotU = 1;
constexpr std::size_t kV = 2;
constexpr std::size_t g(std::size_t k) { return 2 + k; }

constexpr std::array<std::pair<std::size_t, std::size_t>, 22> kVariableGadgetEdges = {{
    {g(1), g(2)}, {g(1), g(3)}, {g(2), g(3)},
    {g(4), g(5)}, {g(4), g(6)}, {g(5), g(6)},
    {g(7), g(8)}, {g(7), g(9)}, {g(8), g(9)},
    {g(10), g(11)}, {g(10), g(12)}, {g(11), g(12)},
    {g(13), g(14)}, {g(13), g(15)}, {g(14), g(15)},
    {kU, g(1)}, {kU, g(4)},        // u is dominated twice by shaded vertices
    {kNotU, g(7)}, {kNotU, g(10)}, // so is not_u
    {kV, g(13)},                   // v has a single shaded neighbour ...
    {kV, kU}, {kV, kNotU},         // ... and needs one of the literals
}};

// Clause gadget: c, t_1, t_2, t_3. Only t_1 touches c, so c's second
// dominator has to be one of its literal vertices.
constexpr std::size_t kC = 0;
constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kClauseGadgetEdges = {{
    {1, 2}, {1, 3}, {2, 3}, {kC, 1},
}};

}  // namespace

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  long long declared_clauses = 0;
  CnfInstance cnf;
  std::vector<Literal> pending;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "%") break;  // SATLIB trailer
    if (tok == "p") {
      if (have_header) throw InputError("duplicate DIMACS header");
      std::string fmt, nv, nc, extra;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || (ls >> extra)) {
        throw InputError("malformed DIMACS header: '" + line + "'");
      }
      auto vars = parse_int(nv);
      declared_clauses = parse_int(nc);
      if (vars <= 0) throw InputError("instance has no variables");
      if (declared_clauses < 0) throw InputError("negative clause count");
      cnf.num_vars = static_cast<std::size_t>(vars);
      have_header = true;
      continue;
    }
    if (!have_header) throw InputError("clause before DIMACS header");
    do {
      auto lit = parse_int(tok);
      if (lit == 0) {
        if (pending.size() != 3) {
          throw InputError("clause " + std::to_string(cnf.clauses.size() + 1) + " has " +
                           std::to_string(pending.size()) + " literals; exactly 3 required");
        }
        cnf.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      auto var = lit < 0 ? -lit : lit;
      if (var > static_cast<long long>(cnf.num_vars)) {
        throw InputError("literal " + tok + " exceeds the declared variable count");
      }
      pending.push_back({static_cast<std::size_t>(var - 1), lit < 0});
    } while (ls >> tok);
  }
  if (!have_header) throw InputError("missing DIMACS header");
  if (!pending.empty()) throw InputError("last clause is not terminated by 0");
  if (static_cast<long long>(cnf.clauses.size()) != declared_clauses) {
    throw InputError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

std::string to_dimacs(const CnfInstance& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (const auto& l : clause) {
      out << (l.negated ? "-" : "") << l.var + 1 << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const CnfInstance& cnf, const Assignment& a) {
  if (a.size() != cnf.num_vars) return false;
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return a[l.var] != l.negated; });
  });
}

CnfInstance random_cnf(std::size_t num_vars, std::size_t num_clauses, std::uint64_t seed) {
  if (num_vars == 0) throw InputError("instance has no variables");
  std::mt19937_64 rng(seed);
  CnfInstance cnf;
  cnf.num_vars = num_vars;
  for (std::size_t j = 0; j < num_clauses; ++j) {
    Clause c;
    for (auto& l : c) {
      const auto r = rng();
      l = {static_cast<std::size_t>((r >> 1) % num_vars), (r & 1U) != 0};
    }
    cnf.clauses.push_back(c);
  }
  return cnf;
}

std::optional<Assignment> satisfiable_bruteforce(const CnfInstance& cnf) {
  if (cnf.num_vars > kBruteforceMaxVars) {
    throw InputError("brute-force SAT refuses more than " + std::to_string(kBruteforceMaxVars) +
                     " variables");
  }
  Assignment a(cnf.num_vars);
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t i = 0; i < cnf.num_vars; ++i) a[i] = ((bits >> i) & 1U) != 0;
    if (satisfies(cnf, a)) return a;
  }
  return std::nullopt;
}

const char* role_name(Role r) {
  switch (r) {
    case Role::PositiveLiteral: return "positive-literal";
    case Role::NegativeLiteral: return "negative-literal";
    case Role::Forcing: return "forcing";
    case Role::Shaded: return "shaded";
    case Role::ClauseVertex: return "clause";
    case Role::Triangle: return "triangle";
  }
  return "?";
}

VertexSet ReductionOutput::forced_vertices() const {
  VertexSet s(graph.vertex_count());
  for (Vertex v = 0; v < roles.size(); ++v) {
    if (roles[v].forced()) s.insert(v);
  }
  return s;
}

ReductionOutput build_reduction(const CnfInstance& cnf) {
  if (cnf.num_vars == 0) throw InputError("instance has no variables");
  const std::size_t n_vars = cnf.num_vars;
  const std::size_t n_clauses = cnf.clauses.size();
  const std::size_t n = kVariableGadgetSize * n_vars + kClauseGadgetSize * n_clauses;

  ReductionOutput out;
  out.num_vars = n_vars;
  out.num_clauses = n_clauses;
  out.threshold = 16 * n_vars + 3 * n_clauses;
  out.roles.reserve(n);

  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<Edge> edges;

  for (std::size_t i = 0; i < n_vars; ++i) {
    const auto base = i * kVariableGadgetSize;
    const auto id = std::to_string(i + 1);
    labels.push_back("u_" + id);
    labels.push_back("not_u_" + id);
    labels.push_back("v_" + id);
    out.roles.push_back({Role::PositiveLiteral, i, 0});
    out.roles.push_back({Role::NegativeLiteral, i, 0});
    out.roles.push_back({Role::Forcing, i, 0});
    for (std::size_t k = 1; k <= kVariableGadgetShaded; ++k) {
      labels.push_back("g_" + id + "_" + std::to_string(k));
      out.roles.push_back({Role::Shaded, i, k});
    }
    for (auto [a, b] : kVariableGadgetEdges) edges.emplace_back(base + a, base + b);
  }

  for (std::size_t j = 0; j < n_clauses; ++j) {
    const auto base = n_vars * kVariableGadgetSize + j * kClauseGadgetSize;
    const auto id = std::to_string(j + 1);
    labels.push_back("c_" + id);
    out.roles.push_back({Role::ClauseVertex, j, 0});
    for (std::size_t k = 1; k <= kClauseGadgetTriangle; ++k) {
      labels.push_back("t_" + id + "_" + std::to_string(k));
      out.roles.push_back({Role::Triangle, j, k});
    }
    for (auto [a, b] : kClauseGadgetEdges) edges.emplace_back(base + a, base + b);
    for (const auto& lit : cnf.clauses[j]) {
      if (lit.var >= n_vars) throw InputError("literal refers to an undeclared variable");
      // build_graph collapses the duplicate edge of a repeated literal.
      edges.emplace_back(base + kC, out.literal_vertex(lit));
    }
  }

  out.graph = build_graph(n, edges, std::move(labels));
  return out;
}

nlohmann::json reduction_to_json(const ReductionOutput& out) {
  auto j = graph_to_json(out.graph);
  nlohmann::json roles = nlohmann::json::object();
  for (Vertex v = 0; v < out.roles.size(); ++v) {
    const auto& r = out.roles[v];
    nlohmann::json rec = {{"role", role_name(r.role)},
                          {r.in_variable_gadget() ? "variable" : "clause", r.gadget + 1}};
    if (r.slot != 0) rec["slot"] = r.slot;
    roles[out.graph.label(v)] = std::move(rec);
  }
  j["roles"] = std::move(roles);
  j["threshold"] = out.threshold;
  j["num_vars"] = out.num_vars;
  j["num_clauses"] = out.num_clauses;
  return j;
}

GadgetValidation validate_gadget_forcing(const CnfInstance& cnf, std::uint64_t node_budget) {
  const auto red = build_reduction(cnf);
  const auto& graph = red.graph;
  const auto forced = red.forced_vertices();
  GadgetValidation report;

  report.forced_in_every_optimum = true;
  forced.for_each([&](Vertex v) {
    if (report.forced_in_every_optimum &&
        !is_in_every_optimal_set(graph, Kind::RedOld, v, node_budget)) {
      report.forced_in_every_optimum = false;
    }
  });

  if (auto st = propagate(graph, Kind::RedOld, SearchState::empty(graph.vertex_count()))) {
    report.propagation_forced_count = st->forced_in.size();
    bool extras_are_literals = true;
    (st->forced_in - forced).for_each([&](Vertex v) {
      const auto role = red.roles[v].role;
      if (role != Role::PositiveLiteral && role != Role::NegativeLiteral) {
        extras_are_literals = false;
      }
    });
    report.propagation_forces_shaded = forced.is_subset_of(st->forced_in) && extras_are_literals;
  }

  SolveOptions opts;
  opts.enumerate = true;
  opts.node_budget = node_budget;
  const auto all = min_set(graph, Kind::RedOld, opts);
  report.optimum = all.value.value_or(0);
  report.optimum_count = all.all_minimum_sets->size();
  report.literal_in_every_optimum = all.value.has_value();
  for (const auto& s : *all.all_minimum_sets) {
    for (std::size_t i = 0; i < red.num_vars; ++i) {
      if (!s.contains(red.positive_literal(i)) && !s.contains(red.negative_literal(i))) {
        report.literal_in_every_optimum = false;
      }
    }
  }

  report.clause_single_internal_dominator = true;
  for (std::size_t j = 0; j < red.num_clauses; ++j) {
    const auto c = red.clause_vertex(j);
    std::size_t internal = 0;
    for (std::size_t k = 1; k < kClauseGadgetSize; ++k) internal += graph.adjacent(c, c + k);
    if (internal != 1) report.clause_single_internal_dominator = false;
  }
  return report;
}

SatDecision decide_sat_via_redold(const CnfInstance& cnf, std::uint64_t node_budget) {
  const auto red = build_reduction(cnf);
  SolveOptions opts;
  opts.node_budget = node_budget;
  auto r = min_set(red.graph, Kind::RedOld, opts);
  SatDecision d;
  d.threshold = red.threshold;
  d.redold_value = r.value;
  d.satisfiable = r.value && *r.value == red.threshold;
  d.witness = std::move(r.witness);
  return d;
}

Assignment assignment_from_set(const ReductionOutput& out, const VertexSet& s) {
  if (s.universe() != out.graph.vertex_count()) {
    throw InputError("vertex set belongs to a different graph");
  }
  if (s.size() != out.threshold) {
    throw InputError("set has " + std::to_string(s.size()) + " vertices; threshold is " +
                     std::to_string(out.threshold));
  }
  if (!is_red_old(out.graph, s)) throw InputError("set is not a RED:OLD set of the reduction graph");
  Assignment a(out.num_vars);
  for (std::size_t i = 0; i < out.num_vars; ++i) a[i] = s.contains(out.positive_literal(i));
  return a;
}

}  // namespace oldset::sat
