#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oldset/errors.hpp"
#include "oldset/fixtures.hpp"
#include "oldset/graph_io.hpp"
#include "oldset/grids.hpp"
#include "oldset/reduce3sat.hpp"
#include "oldset/solve.hpp"
#include "oldset/verify.hpp"

namespace oldset::cli {

namespace {

using nlohmann::json;

const char* status_name(int code) {
  switch (code) {
    case kExitOk: return "ok";
    case kExitFails: return "fails";
    case kExitInputError: return "input-error";
    case kExitBudget: return "budget-exceeded";
    case kExitDisagreement: return "disagreement";
  }
  return "unknown";
}

struct Config {
  std::string format = "json";
  std::uint64_t budget = kDefaultNodeBudget;
  std::uint64_t seed = 1;

  // verify / solve
  std::string graph_spec;
  std::string set_spec;
  std::string kind = "old";
  std::size_t fold = 0;
  bool enumerate = false;

  // reduce
  std::string cnf_path;
  std::string emit_path;
  bool decide = false;
  bool validate_gadgets = false;

  // grid / search
  std::string lattice;
  std::string pattern_spec;
  bool show_density = false;
  std::string cross_check;
  std::string max_period = "6x6";
  std::string target;

  // sweep
  std::size_t vars = 3;
  std::size_t clauses = 2;
  std::size_t count = 20;
};

// Emits the report as JSON or as "key: value" lines.
class Reporter {
 public:
  Reporter(std::string command, const Config& cfg, std::ostream& out)
      : cfg_(cfg), out_(out) {
    doc_["command"] = std::move(command);
  }

  json& doc() { return doc_; }

  int finish(int code) {
    doc_["exit_code"] = code;
    doc_["status"] = status_name(code);
    if (cfg_.format == "json") {
      out_ << doc_.dump(2) << '\n';
    } else {
      for (const auto& [key, value] : doc_.items()) {
        out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
             << '\n';
      }
    }
    return code;
  }

 private:
  const Config& cfg_;
  std::ostream& out_;
  json doc_;
};

Graph load_graph(const std::string& spec) {
  if (spec.starts_with("builtin:")) {
    if (auto g = fixtures::builtin_graph(spec)) return *g;
    throw InputError("unknown builtin graph '" + spec + "'");
  }
  return read_graph_file(spec);
}

Vertex resolve_vertex(const Graph& g, const std::string& token) {
  if (auto v = g.find_label(token)) return *v;
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
  if (ec == std::errc() && ptr == token.data() + token.size() && index < g.vertex_count()) {
    return index;
  }
  throw InputError("no vertex '" + token + "' in the graph");
}

VertexSet parse_set(const Graph& g, const std::string& spec) {
  VertexSet s(g.vertex_count());
  std::vector<std::string> tokens;
  if (spec.ends_with(".json")) {
    json j;
    try {
      j = json::parse(read_text_file(spec));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("bad set JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("set")) j = j["set"];
    if (!j.is_array()) throw InputError("set JSON must be an array or {\"set\": [...]}");
    for (const auto& item : j) tokens.push_back(item.is_string() ? item.get<std::string>() : item.dump());
  } else {
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto b = tok.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      tokens.push_back(tok.substr(b, tok.find_last_not_of(" \t") - b + 1));
    }
  }
  for (const auto& t : tokens) s.insert(resolve_vertex(g, t));
  return s;
}

Kind parse_kind(const std::string& name) {
  if (name == "old") return Kind::Old;
  if (name == "redold") return Kind::RedOld;
  throw InputError("kind must be old or redold, got '" + name + "'");
}

json labels_of(const Graph& g, const VertexSet& s) {
  auto arr = json::array();
  s.for_each([&](Vertex v) { arr.push_back(g.label(v)); });
  return arr;
}

json witness_json(const Graph& g, const Witness& w) {
  if (const auto* d = std::get_if<UnderDominated>(&w)) {
    return {{"type", "under-dominated"}, {"vertex", g.label(d->vertex)}, {"count", d->count}};
  }
  if (const auto* p = std::get_if<UnderDistinguished>(&w)) {
    return {{"type", "under-distinguished"},
            {"u", g.label(p->u)},
            {"v", g.label(p->v)},
            {"count", p->count}};
  }
  return nullptr;
}

json coord_json(grids::Coord c) { return json::array({c.x, c.y}); }

json grid_witness_json(const grids::GridWitness& w) {
  if (const auto* d = std::get_if<grids::GridUnderDominated>(&w)) {
    return {{"type", "under-dominated"}, {"vertex", coord_json(d->vertex)}, {"count", d->count}};
  }
  if (const auto* p = std::get_if<grids::GridUnderDistinguished>(&w)) {
    return {{"type", "under-distinguished"},
            {"u", coord_json(p->u)},
            {"v", coord_json(p->v)},
            {"count", p->count}};
  }
  return nullptr;
}

std::pair<std::int64_t, std::int64_t> parse_dims(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw InputError("dimensions must look like WxH, got '" + text + "'");
  auto num = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0) {
      throw InputError("bad dimensions '" + text + "'");
    }
    return v;
  };
  return {num(std::string_view(text).substr(0, x)), num(std::string_view(text).substr(x + 1))};
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  Reporter rep("verify", cfg, out);
  const auto g = load_graph(cfg.graph_spec);
  const auto s = parse_set(g, cfg.set_spec);
  rep.doc()["kind"] = cfg.kind;
  rep.doc()["set"] = labels_of(g, s);
  rep.doc()["size"] = s.size();

  if (cfg.kind == "ld" || cfg.kind == "ic") {
    const bool holds =
        cfg.kind == "ld" ? is_locating_dominating(g, s) : is_identifying_code(g, s);
    rep.doc()["holds"] = holds;
    return rep.finish(holds ? kExitOk : kExitFails);
  }

  const auto kind = parse_kind(cfg.kind);
  const std::size_t k = cfg.fold != 0 ? cfg.fold : fold(kind);
  rep.doc()["fold"] = k;
  const auto report = check_fold(g, s, k);
  rep.doc()["holds"] = report.holds;
  if (!report.holds) rep.doc()["witness"] = witness_json(g, report.witness);
  return rep.finish(report.holds ? kExitOk : kExitFails);
}

int cmd_solve(const Config& cfg, std::ostream& out) {
  Reporter rep("solve", cfg, out);
  const auto g = load_graph(cfg.graph_spec);
  const auto kind = parse_kind(cfg.kind);
  rep.doc()["kind"] = cfg.kind;
  rep.doc()["n"] = g.vertex_count();
  SolveOptions opts;
  opts.enumerate = cfg.enumerate;
  opts.node_budget = cfg.budget;
  SolveResult r;
  try {
    r = min_set(g, kind, opts);
  } catch (const BudgetExceeded& e) {
    rep.doc()["error"] = e.what();
    return rep.finish(kExitBudget);
  }
  rep.doc()["nodes"] = r.nodes;
  if (!r.value) {
    rep.doc()["value"] = "infeasible";
    if (r.all_minimum_sets) rep.doc()["optimum_count"] = 0;
    return rep.finish(kExitOk);
  }
  rep.doc()["value"] = *r.value;
  rep.doc()["witness"] = labels_of(g, r.witness);
  if (r.all_minimum_sets) {
    auto all = json::array();
    for (const auto& s : *r.all_minimum_sets) all.push_back(labels_of(g, s));
    rep.doc()["optimum_count"] = r.all_minimum_sets->size();
    rep.doc()["all_minimum_sets"] = std::move(all);
  }
  return rep.finish(kExitOk);
}

json assignment_json(const sat::Assignment& a) {
  auto arr = json::array();
  for (bool b : a) arr.push_back(b);
  return arr;
}

int cmd_reduce(const Config& cfg, std::ostream& out) {
  Reporter rep("reduce", cfg, out);
  const auto cnf = sat::parse_dimacs(read_text_file(cfg.cnf_path));
  const auto red = sat::build_reduction(cnf);
  rep.doc()["num_vars"] = cnf.num_vars;
  rep.doc()["num_clauses"] = cnf.clauses.size();
  rep.doc()["vertices"] = red.graph.vertex_count();
  rep.doc()["edges"] = red.graph.edge_count();
  rep.doc()["threshold"] = red.threshold;

  if (!cfg.emit_path.empty()) {
    std::ofstream f(cfg.emit_path);
    if (!f) throw InputError("cannot write '" + cfg.emit_path + "'");
    f << sat::reduction_to_json(red).dump(2) << '\n';
    rep.doc()["emitted"] = cfg.emit_path;
  }

  int code = kExitOk;
  try {
    if (cfg.validate_gadgets) {
      const auto v = sat::validate_gadget_forcing(cnf, cfg.budget);
      rep.doc()["gadget_validation"] = {
          {"ok", v.ok()},
          {"forced_in_every_optimum", v.forced_in_every_optimum},
          {"propagation_forces_shaded", v.propagation_forces_shaded},
          {"propagation_forced_count", v.propagation_forced_count},
          {"literal_in_every_optimum", v.literal_in_every_optimum},
          {"clause_single_internal_dominator", v.clause_single_internal_dominator},
          {"optimum", v.optimum},
          {"optimum_count", v.optimum_count},
      };
      if (!v.ok()) code = kExitFails;
    }
    if (cfg.decide) {
      const auto d = sat::decide_sat_via_redold(cnf, cfg.budget);
      const auto oracle = sat::satisfiable_bruteforce(cnf);
      const bool agree = d.satisfiable == oracle.has_value();
      json dec = {{"satisfiable_via_redold", d.satisfiable},
                  {"satisfiable_bruteforce", oracle.has_value()},
                  {"agree", agree},
                  {"threshold", d.threshold}};
      if (d.redold_value) {
        dec["redold_value"] = *d.redold_value;
      } else {
        dec["redold_value"] = "infeasible";
      }
      dec["summary"] = d.satisfiable ? "sat, RED:OLD = threshold" : "unsat, RED:OLD > threshold";
      if (d.satisfiable) {
        const auto a = sat::assignment_from_set(red, d.witness);
        dec["assignment"] = assignment_json(a);
        dec["assignment_satisfies"] = sat::satisfies(cnf, a);
        if (!sat::satisfies(cnf, a)) code = kExitDisagreement;
      }
      rep.doc()["decision"] = std::move(dec);
      if (!agree) code = kExitDisagreement;
    }
  } catch (const BudgetExceeded& e) {
    rep.doc()["error"] = e.what();
    return rep.finish(kExitBudget);
  }
  return rep.finish(code);
}

grids::PeriodicPattern load_pattern(const std::string& spec) {
  if (spec.starts_with("builtin:")) {
    if (auto p = grids::builtin_pattern(spec)) return *p;
    throw InputError("unknown builtin pattern '" + spec + "'");
  }
  json j;
  try {
    j = json::parse(read_text_file(spec));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("bad pattern JSON: ") + e.what());
  }
  return grids::pattern_from_json(j);
}

int cmd_grid(const Config& cfg, std::ostream& out) {
  Reporter rep("grid", cfg, out);
  const auto lattice = grids::parse_lattice(cfg.lattice);
  const auto p = load_pattern(cfg.pattern_spec);
  if (p.lattice() != lattice) {
    throw InputError(std::string("pattern is for lattice ") + grids::lattice_name(p.lattice()) +
                     ", not " + grids::lattice_name(lattice));
  }
  Kind kind = Kind::Old;
  std::string kind_label = "old";
  if (!cfg.kind.empty()) {
    kind = parse_kind(cfg.kind);
    kind_label = cfg.kind;
  } else if (cfg.pattern_spec.starts_with("builtin:")) {
    kind = grids::builtin_pattern_kind(cfg.pattern_spec);
    kind_label = kind == Kind::Old ? "old" : "redold";
  }

  const auto report = grids::verify_pattern(p, kind);
  rep.doc()["lattice"] = grids::lattice_name(lattice);
  rep.doc()["pattern"] = p.name().empty() ? cfg.pattern_spec : p.name();
  rep.doc()["kind"] = kind_label;
  rep.doc()["period"] = {p.px(), p.py()};
  rep.doc()["holds"] = report.holds;
  if (!report.holds) rep.doc()["witness"] = grid_witness_json(report.witness);
  if (cfg.show_density) rep.doc()["density"] = report.density.str();

  int code = report.holds ? kExitOk : kExitFails;
  if (!cfg.cross_check.empty()) {
    auto [w, h] = cfg.cross_check == "auto" ? grids::cross_check_dimensions(p)
                                            : parse_dims(cfg.cross_check);
    const auto cc = grids::torus_cross_check(p, kind, w, h);
    rep.doc()["cross_check"] = {{"width", cc.width},
                                {"height", cc.height},
                                {"torus_holds", cc.torus_holds},
                                {"agree", cc.agree()}};
    if (!cc.agree()) code = kExitDisagreement;
  }
  return rep.finish(code);
}

int cmd_search(const Config& cfg, std::ostream& out) {
  Reporter rep("search", cfg, out);
  const auto lattice = grids::parse_lattice(cfg.lattice);
  const auto kind = parse_kind(cfg.kind);
  const auto [mx, my] = parse_dims(cfg.max_period);
  const auto target = Rational::parse(cfg.target);
  rep.doc()["lattice"] = grids::lattice_name(lattice);
  rep.doc()["kind"] = cfg.kind;
  rep.doc()["max_period"] = {mx, my};
  rep.doc()["target"] = target.str();
  auto p = grids::search_patterns(lattice, kind, mx, my, target);
  if (!p) {
    rep.doc()["found"] = false;
    return rep.finish(kExitFails);
  }
  rep.doc()["found"] = true;
  rep.doc()["pattern"] = grids::pattern_to_json(*p);
  rep.doc()["density"] = grids::density(*p).str();
  return rep.finish(kExitOk);
}

int cmd_sweep(const Config& cfg, std::ostream& out) {
  Reporter rep("sweep", cfg, out);
  rep.doc()["num_vars"] = cfg.vars;
  rep.doc()["num_clauses"] = cfg.clauses;
  rep.doc()["seed"] = cfg.seed;
  std::size_t agreements = 0;
  auto rows = json::array();
  try {
    for (std::size_t i = 0; i < cfg.count; ++i) {
      const auto cnf = sat::random_cnf(cfg.vars, cfg.clauses, cfg.seed + i);
      const auto d = sat::decide_sat_via_redold(cnf, cfg.budget);
      const bool oracle = sat::satisfiable_bruteforce(cnf).has_value();
      agreements += d.satisfiable == oracle;
      rows.push_back({{"cnf", sat::to_dimacs(cnf)},
                      {"satisfiable", oracle},
                      {"redold_value", d.redold_value.value_or(0)},
                      {"agree", d.satisfiable == oracle}});
    }
  } catch (const BudgetExceeded& e) {
    rep.doc()["error"] = e.what();
    return rep.finish(kExitBudget);
  }
  rep.doc()["instances"] = std::move(rows);
  rep.doc()["agreements"] = agreements;
  rep.doc()["count"] = cfg.count;
  return rep.finish(agreements == cfg.count ? kExitOk : kExitDisagreement);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Open-locating-dominating and redundant OLD sets: verify, solve, reduce, grids"};
  app.name(args.empty() ? "oldset" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a vertex set against a graph");
  verify->add_option("graph", cfg.graph_spec, "Graph file (JSON or edge list) or builtin:NAME")
      ->required();
  verify->add_option("--set,-s", cfg.set_spec, "Comma list of labels/indices, or a .json file")
      ->required();
  verify->add_option("--kind,-k", cfg.kind, "old | redold | ld | ic")
      ->check(CLI::IsMember({"old", "redold", "ld", "ic"}))
      ->capture_default_str();
  verify->add_option("--fold", cfg.fold, "Override the fold k for old/redold")
      ->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Exact minimum OLD / RED:OLD set");
  solve->add_option("graph", cfg.graph_spec, "Graph file or builtin:NAME")->required();
  solve->add_option("--kind,-k", cfg.kind, "old | redold")
      ->check(CLI::IsMember({"old", "redold"}))
      ->capture_default_str();
  solve->add_flag("--enumerate", cfg.enumerate, "List every minimum set");
  solve->add_option("--budget", cfg.budget, "Search node budget")->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Build the 3-SAT to RED:OLD reduction");
  reduce->add_option("cnf", cfg.cnf_path, "DIMACS CNF file (3 literals per clause)")->required();
  reduce->add_option("--emit", cfg.emit_path, "Write the reduction graph JSON here");
  reduce->add_flag("--decide", cfg.decide, "Decide satisfiability via RED:OLD and cross-check");
  reduce->add_flag("--validate-gadgets", cfg.validate_gadgets, "Check gadget forcing by solving");
  reduce->add_option("--budget", cfg.budget, "Search node budget")->capture_default_str();

  auto* grid = app.add_subcommand("grid", "Verify a periodic pattern on an infinite lattice");
  grid->add_option("lattice", cfg.lattice, "sq | hex | tri | king")->required();
  grid->add_option("pattern", cfg.pattern_spec, "Pattern JSON file or builtin:NAME")->required();
  std::string grid_kind;
  grid->add_option("--kind,-k", grid_kind, "old | redold (default: builtin's kind, else old)")
      ->check(CLI::IsMember({"old", "redold"}));
  grid->add_flag("--density", cfg.show_density, "Report the exact density");
  grid->add_option("--cross-check", cfg.cross_check,
                   "Also verify on a WxH torus ('auto' picks 3x the period)");

  auto* search = app.add_subcommand("search", "Search small rectangular periods for a pattern");
  search->add_option("lattice", cfg.lattice, "sq | hex | tri | king")->required();
  search->add_option("--kind,-k", cfg.kind, "old | redold")
      ->check(CLI::IsMember({"old", "redold"}))
      ->capture_default_str();
  search->add_option("--max-period", cfg.max_period, "Largest period WxH")->capture_default_str();
  search->add_option("--target", cfg.target, "Maximum density, e.g. 1/3")->required();

  auto* sweep = app.add_subcommand("sweep", "Random 3-CNF agreement sweep for the reduction");
  sweep->add_option("--vars", cfg.vars, "Variables per instance")
      ->check(CLI::Range(1, 24))
      ->capture_default_str();
  sweep->add_option("--clauses", cfg.clauses, "Clauses per instance")->capture_default_str();
  sweep->add_option("--count", cfg.count, "Number of instances")->capture_default_str();
  sweep->add_option("--seed", cfg.seed, "Seed of the first instance")->capture_default_str();
  sweep->add_option("--budget", cfg.budget, "Search node budget")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("oldset");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "verify") return cmd_verify(cfg, out);
    if (command == "solve") return cmd_solve(cfg, out);
    if (command == "reduce") return cmd_reduce(cfg, out);
    if (command == "grid") {
      cfg.kind = grid_kind;
      return cmd_grid(cfg, out);
    }
    if (command == "search") return cmd_search(cfg, out);
    if (command == "sweep") return cmd_sweep(cfg, out);
  } catch (const InputError& e) {
    Reporter rep(command, cfg, out);
    rep.doc()["error"] = e.what();
    err << "error: " << e.what() << '\n';
    return rep.finish(kExitInputError);
  }
  return kExitInputError;
}

}  // namespace oldset::cli
