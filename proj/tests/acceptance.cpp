// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any quantitative criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oldset/fixtures.hpp"
#include "oldset/grids.hpp"
#include "oldset/reduce3sat.hpp"
#include "oldset/solve.hpp"
#include "oldset/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace oldset;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.detail += " (over time limit of " + std::to_string(static_cast<int>(limit_s)) + " s)";
  }
  std::printf("[%s] criterion %d: %s | %s | %.2f s\n", o.pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass;
}

Outcome g11_certificates() {
  const auto g = fixtures::g11();
  const auto old = min_set(g, Kind::Old);
  SolveOptions opts;
  opts.enumerate = true;
  const auto red = min_set(g, Kind::RedOld, opts);
  const bool ok = old.value == 6U && red.value == 9U && red.all_minimum_sets &&
                  red.all_minimum_sets->size() == 1 &&
                  red.all_minimum_sets->front() == fixtures::g11_redold_set(g);
  return {ok, "OLD=" + std::to_string(old.value.value_or(0)) +
                  " RED:OLD=" + std::to_string(red.value.value_or(0)) + " optima=" +
                  std::to_string(red.all_minimum_sets ? red.all_minimum_sets->size() : 0) +
                  " witness={" + format_set(g, red.witness) + "}"};
}

Outcome characterizations() {
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::uint64_t disagreements = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t gm = 0; gm < testing::graph_count(n); ++gm) {
      const auto g = testing::graph_from_mask(n, gm);
      ++graphs;
      for (std::uint64_t sm = 0; sm < (std::uint64_t{1} << n); ++sm) {
        const auto s = testing::subset_from_mask(n, sm);
        const bool old = is_old(g, s).holds;
        if (old != is_old_by_restricted_neighborhoods(g, s) || old != is_old_by_collection(g, s)) {
          ++disagreements;
        }
        if (is_red_old(g, s).holds != is_red_old_definitional(g, s).holds) ++disagreements;
        ++checks;
      }
    }
  }
  return {disagreements == 0, std::to_string(graphs) + " labelled graphs, " +
                                  std::to_string(checks) + " (graph, subset) pairs, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome solver_oracle() {
  std::vector<Graph> graphs;
  for (const auto& name : fixtures::builtin_graph_names()) graphs.push_back(*fixtures::builtin_graph(name));
  for (std::size_t n = 2; n <= 12; ++n) {
    graphs.push_back(fixtures::path(n));
    if (n >= 3) graphs.push_back(fixtures::cycle(n));
    graphs.push_back(fixtures::complete(n));
  }
  const std::size_t named = graphs.size();
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 240; ++i) {
    const std::size_t n = 2 + rng() % 11;
    const double p = 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
    graphs.push_back(testing::random_graph(n, p, rng));
  }
  std::size_t disagreements = 0;
  std::size_t feasible = 0;
  for (const auto& g : graphs) {
    for (auto kind : {Kind::Old, Kind::RedOld}) {
      const auto fast = min_set(g, kind);
      const auto slow = min_set_bruteforce(g, kind);
      if (fast.value != slow.value || (fast.value && !(fast.witness == slow.witness))) ++disagreements;
      feasible += fast.feasible();
    }
  }
  return {disagreements == 0, std::to_string(graphs.size()) + " graphs (" + std::to_string(named) +
                                  " named), " + std::to_string(feasible) + " feasible solves, " +
                                  std::to_string(disagreements) + " disagreements"};
}

/// Every multiset of three literals over `n` variables.
std::vector<sat::Clause> all_clauses(std::size_t n) {
  std::vector<sat::Literal> lits;
  for (std::size_t v = 0; v < n; ++v) {
    lits.push_back({v, false});
    lits.push_back({v, true});
  }
  std::vector<sat::Clause> out;
  for (std::size_t a = 0; a < lits.size(); ++a)
    for (std::size_t b = a; b < lits.size(); ++b)
      for (std::size_t c = b; c < lits.size(); ++c) out.push_back({lits[a], lits[b], lits[c]});
  return out;
}

/// N = 2 with M = 1 and M = 2 (clause multisets).
std::vector<sat::CnfInstance> exhaustive_family() {
  const auto clauses = all_clauses(2);
  std::vector<sat::CnfInstance> out;
  for (const auto& c : clauses) out.push_back({2, {c}});
  for (std::size_t i = 0; i < clauses.size(); ++i)
    for (std::size_t j = i; j < clauses.size(); ++j) out.push_back({2, {clauses[i], clauses[j]}});
  return out;
}

Outcome reduction_iff() {
  auto family = exhaustive_family();
  const std::size_t exhaustive = family.size();
  for (std::uint64_t seed = 1; seed <= 24; ++seed) family.push_back(sat::random_cnf(3, 2, seed));
  std::size_t disagreements = 0;
  std::size_t sat_count = 0;
  for (const auto& cnf : family) {
    const auto n = cnf.num_vars;
    const auto m = cnf.clauses.size();
    const auto red = sat::build_reduction(cnf);
    const auto d = sat::decide_sat_via_redold(cnf);
    const bool oracle = sat::satisfiable_bruteforce(cnf).has_value();
    const bool ok = d.satisfiable == oracle && red.graph.vertex_count() == 18 * n + 4 * m &&
                    d.threshold == 16 * n + 3 * m && d.redold_value && *d.redold_value >= d.threshold;
    disagreements += !ok;
    sat_count += oracle;
  }
  return {disagreements == 0,
          std::to_string(exhaustive) + " exhaustive N=2 instances + " +
              std::to_string(family.size() - exhaustive) + " seeded N=3,M=2; " +
              std::to_string(sat_count) + " satisfiable; " + std::to_string(disagreements) +
              " disagreements"};
}

Outcome gadget_forcing() {
  std::vector<sat::CnfInstance> family;
  for (const auto& c : all_clauses(1)) family.push_back({1, {c}});
  const auto c1 = all_clauses(1);
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (std::size_t j = i; j < c1.size(); ++j) family.push_back({1, {c1[i], c1[j]}});
  for (const auto& cnf : exhaustive_family()) family.push_back(cnf);
  std::size_t failures = 0;
  std::size_t extra_literals = 0;
  for (const auto& cnf : family) {
    const auto v = sat::validate_gadget_forcing(cnf);
    failures += !v.ok();
    const auto base = sat::kVariableGadgetShaded * cnf.num_vars +
                      sat::kClauseGadgetTriangle * cnf.clauses.size();
    extra_literals += v.propagation_forced_count - base;
  }
  return {failures == 0,
          std::to_string(family.size()) +
              " instances with N<=2, M<=2; propagation forces all 15N+3M shaded/triangle "
              "vertices (plus " + std::to_string(extra_literals) +
              " literal vertices in total); every optimum adds u_i or not_u_i, reaching 16N+3M; " +
              std::to_string(failures) + " failures"};
}

Outcome grid_densities() {
  using grids::builtin_pattern;
  const auto found = grids::search_patterns(grids::Lattice::King, Kind::RedOld, 6, 6, {1, 3});
  std::string detail;
  bool ok = found && grids::density(*found) == Rational(1, 3) &&
            found->cells() == builtin_pattern("king-redold")->cells() &&
            found->px() == builtin_pattern("king-redold")->px() &&
            found->py() == builtin_pattern("king-redold")->py();
  detail = found ? "search KING RED:OLD <=6x6 -> period " + std::to_string(found->px()) + "x" +
                       std::to_string(found->py()) + " density " + grids::density(*found).str() +
                       (ok ? " (matches builtin)" : " (differs from builtin)")
                 : "search KING RED:OLD <=6x6 found nothing";
  const std::pair<const char*, Rational> expected[] = {
      {"sq-old", {2, 5}},   {"sq-redold", {1, 2}},  {"hex-old", {1, 2}},  {"hex-redold", {2, 3}},
      {"tri-old", {4, 13}}, {"tri-redold", {3, 8}}, {"king-old", {1, 4}}, {"king-redold", {1, 3}},
  };
  for (auto [name, d] : expected) {
    const auto p = builtin_pattern(name);
    const auto r = grids::verify_pattern(*p, grids::builtin_pattern_kind(name));
    const bool good = r.holds && r.density == d;
    ok = ok && good;
    detail += std::string("; ") + name + "=" + r.density.str() + (good ? "" : " (FAILED)");
  }
  return {ok, detail};
}

Outcome torus_cross_check() {
  bool ok = true;
  std::string detail;
  for (const auto& name : grids::builtin_pattern_names()) {
    const auto p = *grids::builtin_pattern(name);
    const auto cc = grids::torus_cross_check(p, grids::builtin_pattern_kind(name));
    ok = ok && cc.agree() && cc.local_holds;
    if (!detail.empty()) detail += "; ";
    detail += name + " " + std::to_string(cc.width) + "x" + std::to_string(cc.height) +
              (cc.agree() ? " agree" : " DISAGREE");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "G11 certificates", 10, g11_certificates);
  all &= report(2, "characterization equivalences (n <= 6, all subsets)", 0, characterizations);
  all &= report(3, "solver agrees with brute force", 300, solver_oracle);
  all &= report(4, "reduction iff at desk scale", 1800, reduction_iff);
  all &= report(5, "gadget forcing", 0, gadget_forcing);
  all &= report(6, "grid densities", 60, grid_densities);
  all &= report(7, "torus cross-check of every builtin", 0, torus_cross_check);
  std::printf(
      "[NOTE] criterion 8: density lower bounds and NP-hardness are proof facts; they are "
      "checked only indirectly, through consistency in criteria 4-6.\n");
  return all ? 0 : 1;
}
