#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "oldset/graph.hpp"
#include "oldset/solve.hpp"

namespace oldset::sat {

struct Literal {
  std::size_t var;  // 0-based
  bool negated;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF over variables 0..num_vars-1. Every clause has exactly three
/// literals; repeats and complementary pairs are allowed.
struct CnfInstance {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
};

using Assignment = std::vector<bool>;

/// DIMACS CNF. Comment lines ('c') are skipped, clauses may span lines and
/// are terminated by 0. Clause size other than 3, zero variables, a clause
/// count that disagrees with the header, or a malformed token is an
/// InputError.
CnfInstance parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfInstance& cnf);

bool satisfies(const CnfInstance& cnf, const Assignment& a);

/// Uniform random 3-CNF (literals drawn independently) from a 64-bit
/// Mersenne Twister; the same seed gives the same instance on every platform.
CnfInstance random_cnf(std::size_t num_vars, std::size_t num_clauses, std::uint64_t seed);

inline constexpr std::size_t kBruteforceMaxVars = 24;

/// Tries all 2^N assignments (variable 0 is the least significant bit).
/// Returns the first satisfying one. N > 24 is refused.
std::optional<Assignment> satisfiable_bruteforce(const CnfInstance& cnf);

// Gadget sizes.
inline constexpr std::size_t kVariableGadgetSize = 18;
inline constexpr std::size_t kVariableGadgetShaded = 15;
inline constexpr std::size_t kClauseGadgetSize = 4;
inline constexpr std::size_t kClauseGadgetTriangle = 3;

enum class Role {
  PositiveLiteral,  // u_i
  NegativeLiteral,  // not_u_i
  Forcing,          // v_i
  Shaded,           // g_i_k, k = 1..15
  ClauseVertex,     // c_j
  Triangle,         // t_j_k, k = 1..3
};

const char* role_name(Role r);

struct VertexRole {
  Role role;
  std::size_t gadget;  // variable index for variable gadgets, clause index otherwise (0-based)
  std::size_t slot;    // k for Shaded / Triangle (1-based), 0 otherwise

  bool in_variable_gadget() const { return role <= Role::Shaded; }
  /// Shaded and triangle vertices belong to every minimum RED:OLD set.
  bool forced() const { return role == Role::Shaded || role == Role::Triangle; }
};

struct ReductionOutput {
  Graph graph;
  std::vector<VertexRole> roles;
  std::size_t threshold = 0;  // 16N + 3M
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;

  Vertex positive_literal(std::size_t var) const { return var * kVariableGadgetSize; }
  Vertex negative_literal(std::size_t var) const { return var * kVariableGadgetSize + 1; }
  Vertex forcing_vertex(std::size_t var) const { return var * kVariableGadgetSize + 2; }
  Vertex literal_vertex(const Literal& l) const {
    return l.negated ? negative_literal(l.var) : positive_literal(l.var);
  }
  Vertex clause_vertex(std::size_t clause) const {
    return num_vars * kVariableGadgetSize + clause * kClauseGadgetSize;
  }

  /// All shaded and triangle vertices.
  VertexSet forced_vertices() const;
};

/// Variable gadgets first (18 consecutive indices each: u, not_u, v, g_1..g_15),
/// then clause gadgets (4 each: c, t_1, t_2, t_3). c_j is joined to the literal
/// vertices of its clause; a literal repeated within a clause yields one edge.
ReductionOutput build_reduction(const CnfInstance& cnf);

/// Graph JSON plus "roles" (label -> role record) and "threshold".
nlohmann::json reduction_to_json(const ReductionOutput& out);

struct GadgetValidation {
  /// Every shaded and triangle vertex lies in every minimum RED:OLD set.
  bool forced_in_every_optimum = false;
  /// Propagation from the empty state forces every shaded and triangle
  /// vertex, and nothing besides them except literal vertices.
  bool propagation_forces_shaded = false;
  std::size_t propagation_forced_count = 0;
  /// Each minimum RED:OLD set holds u_i or not_u_i for every i.
  bool literal_in_every_optimum = false;
  /// c_j has exactly one neighbour inside its own gadget.
  bool clause_single_internal_dominator = false;
  std::size_t optimum = 0;
  std::size_t optimum_count = 0;

  bool ok() const {
    return forced_in_every_optimum && propagation_forces_shaded && literal_in_every_optimum &&
           clause_single_internal_dominator;
  }
};

/// Checks the gadget forcing argument on a small instance by exact solving.
GadgetValidation validate_gadget_forcing(const CnfInstance& cnf,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

struct SatDecision {
  bool satisfiable = false;
  std::optional<std::size_t> redold_value;  // minimum RED:OLD size of the reduction graph
  std::size_t threshold = 0;
  VertexSet witness;
};

/// Satisfiable iff RED:OLD of the reduction graph equals 16N + 3M.
SatDecision decide_sat_via_redold(const CnfInstance& cnf,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

/// Reads the truth assignment off a threshold-sized RED:OLD set: variable i
/// is true iff u_i is in S. Anything else is an InputError.
Assignment assignment_from_set(const ReductionOutput& out, const VertexSet& s);

}  // namespace oldset::sat
