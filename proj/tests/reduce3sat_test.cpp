#include <gtest/gtest.h>

#include "oldset/errors.hpp"
#include "oldset/reduce3sat.hpp"
#include "oldset/verify.hpp"

namespace oldset::sat {
namespace {

constexpr const char* kFigure6 = "c two clauses over four variables\np cnf 4 2\n1 2 -3 0\n-1 2 -4 0\n";
constexpr const char* kContradiction = "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n";
constexpr const char* kSingle = "p cnf 1 1\n1 1 1 0\n";

TEST(ParseDimacs, Figure6Instance) {
  auto cnf = parse_dimacs(kFigure6);
  EXPECT_EQ(cnf.num_vars, 4U);
  ASSERT_EQ(cnf.clauses.size(), 2U);
  EXPECT_EQ(cnf.clauses[0], (Clause{{{0, false}, {1, false}, {2, true}}}));
  EXPECT_EQ(cnf.clauses[1], (Clause{{{0, true}, {1, false}, {3, true}}}));
}

TEST(ParseDimacs, RepeatedLiteralAndMultilineClause) {
  auto cnf = parse_dimacs(kSingle);
  EXPECT_EQ(cnf.num_vars, 1U);
  EXPECT_EQ(cnf.clauses.size(), 1U);
  auto split = parse_dimacs("p cnf 3 1\n1\n-2 3\n0\n");
  EXPECT_EQ(split.clauses[0][2], (Literal{2, false}));
}

TEST(ParseDimacs, Errors) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 -2 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 0 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 2 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p dnf 2 1\n1 2 2 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("1 2 2 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 x 0\n"), InputError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 2\n"), InputError);
}

TEST(ParseDimacs, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto cnf = random_cnf(1 + seed % 5, seed % 4, seed);
    auto back = parse_dimacs(to_dimacs(cnf));
    EXPECT_EQ(back.num_vars, cnf.num_vars);
    EXPECT_EQ(back.clauses, cnf.clauses);
  }
}

TEST(SatisfiableBruteforce, Examples) {
  auto fig6 = satisfiable_bruteforce(parse_dimacs(kFigure6));
  ASSERT_TRUE(fig6);
  EXPECT_TRUE(satisfies(parse_dimacs(kFigure6), *fig6));
  // u2 = true alone satisfies both clauses.
  EXPECT_TRUE(satisfies(parse_dimacs(kFigure6), {false, true, false, false}));
  EXPECT_FALSE(satisfiable_bruteforce(parse_dimacs(kContradiction)));
  EXPECT_TRUE(satisfiable_bruteforce(CnfInstance{1, {}}));
  EXPECT_THROW(satisfiable_bruteforce(CnfInstance{25, {}}), InputError);
}

TEST(BuildReduction, SizesAndRoles) {
  auto red = build_reduction(parse_dimacs(kFigure6));
  EXPECT_EQ(red.graph.vertex_count(), 80U);
  EXPECT_EQ(red.threshold, 70U);
  EXPECT_EQ(red.forced_vertices().size(), 15U * 4 + 3U * 2);

  auto one = build_reduction(parse_dimacs(kSingle));
  EXPECT_EQ(one.graph.vertex_count(), 22U);
  EXPECT_EQ(one.threshold, 19U);
  EXPECT_THROW(build_reduction(CnfInstance{0, {}}), InputError);
}

TEST(BuildReduction, LayoutAndClauseAttachment) {
  const auto cnf = parse_dimacs(kFigure6);
  const auto red = build_reduction(cnf);
  const auto& g = red.graph;
  EXPECT_EQ(g.label(0), "u_1");
  EXPECT_EQ(g.label(1), "not_u_1");
  EXPECT_EQ(g.label(2), "v_1");
  EXPECT_EQ(g.label(3), "g_1_1");
  EXPECT_EQ(g.label(17), "g_1_15");
  EXPECT_EQ(g.label(72), "c_1");
  EXPECT_EQ(g.label(79), "t_2_3");

  for (std::size_t i = 0; i < cnf.num_vars; ++i) {
    std::size_t shaded = 0;
    for (Vertex v = i * 18; v < (i + 1) * 18; ++v) {
      EXPECT_EQ(red.roles[v].gadget, i);
      shaded += red.roles[v].role == Role::Shaded;
    }
    EXPECT_EQ(shaded, kVariableGadgetShaded);
  }
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    const auto c = red.clause_vertex(j);
    VertexSet literals(g.vertex_count());
    for (const auto& l : cnf.clauses[j]) literals.insert(red.literal_vertex(l));
    VertexSet outside = g.neighbors(c);
    for (Vertex k = c; k < c + kClauseGadgetSize; ++k) outside.erase(k);
    EXPECT_EQ(outside, literals);
    EXPECT_TRUE(g.adjacent(c + 1, c + 2) && g.adjacent(c + 1, c + 3) && g.adjacent(c + 2, c + 3));
  }
}

TEST(BuildReduction, RepeatedLiteralGivesOneEdge) {
  const auto red = build_reduction(parse_dimacs(kSingle));
  const auto c = red.clause_vertex(0);
  EXPECT_EQ(red.graph.degree(c), 2U);  // t_1_1 and u_1
  EXPECT_TRUE(red.graph.adjacent(c, red.positive_literal(0)));
}

TEST(BuildReduction, SizeIdentityOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto n = 1 + seed % 6;
    const auto m = seed % 7;
    const auto red = build_reduction(random_cnf(n, m, seed));
    EXPECT_EQ(red.graph.vertex_count(), 18 * n + 4 * m);
    EXPECT_EQ(red.threshold, 16 * n + 3 * m);
  }
}

TEST(ReductionJson, CarriesRolesAndThreshold) {
  const auto j = reduction_to_json(build_reduction(parse_dimacs(kSingle)));
  EXPECT_EQ(j["n"], 22);
  EXPECT_EQ(j["threshold"], 19);
  EXPECT_EQ(j["roles"]["u_1"]["role"], "positive-literal");
  EXPECT_EQ(j["roles"]["g_1_7"]["slot"], 7);
  EXPECT_EQ(j["roles"]["t_1_2"]["clause"], 1);
  EXPECT_EQ(j["labels"].size(), 22U);
}

TEST(ValidateGadgetForcing, SmallInstances) {
  for (const char* text : {kSingle, "p cnf 2 1\n1 -2 2 0\n", kFigure6}) {
    const auto v = validate_gadget_forcing(parse_dimacs(text));
    EXPECT_TRUE(v.forced_in_every_optimum) << text;
    EXPECT_TRUE(v.propagation_forces_shaded) << text;
    EXPECT_TRUE(v.literal_in_every_optimum) << text;
    EXPECT_TRUE(v.clause_single_internal_dominator) << text;
  }
}

TEST(DecideSat, Examples) {
  const auto fig6 = decide_sat_via_redold(parse_dimacs(kFigure6));
  EXPECT_TRUE(fig6.satisfiable);
  EXPECT_EQ(*fig6.redold_value, 70U);

  const auto contra = decide_sat_via_redold(parse_dimacs(kContradiction));
  EXPECT_FALSE(contra.satisfiable);
  EXPECT_GT(*contra.redold_value, 22U);

  const auto single = decide_sat_via_redold(parse_dimacs(kSingle));
  EXPECT_TRUE(single.satisfiable);
  EXPECT_EQ(*single.redold_value, 19U);
}

TEST(AssignmentFromSet, Examples) {
  const auto cnf = parse_dimacs(kSingle);
  const auto red = build_reduction(cnf);
  const auto d = decide_sat_via_redold(cnf);
  EXPECT_EQ(assignment_from_set(red, d.witness), (Assignment{true}));
  EXPECT_THROW(assignment_from_set(red, VertexSet::full(22)), InputError);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rc = random_cnf(2, 2, seed);
    const auto dr = decide_sat_via_redold(rc);
    if (!dr.satisfiable) continue;
    EXPECT_TRUE(satisfies(rc, assignment_from_set(build_reduction(rc), dr.witness)));
  }
}

}  // namespace
}  // namespace oldset::sat
