#pragma once

// Node balancing: Cayley matrices, tree constants, the monomial conditions on
// the rate constants, steady-state binomials and the symmetry formulation.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crn/polynomial.hpp"
#include "crn/reaction_graph.hpp"

namespace crn {

/// (n + l_G) x m_G: the labeling matrix stacked on component indicators.
IntMatrix cayley_matrix(const ReactionGraph& g);

/// Exact nullspace basis, denominators cleared, content removed, first
/// nonzero entry positive.
std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& a);

/// m_G x m_G Laplacian at numeric rates: entry (k, j) is kappa_l for the edge
/// j -> k realizing reaction l, the diagonal makes every column sum zero.
RationalMatrix laplacian(const ReactionGraph& g, std::span<const Rational> kappa);

/// K_{G,i}: sum over spanning trees of node i's component, all edges directed
/// toward i, of the product of the edges' rate constants. Computed by
/// recursive contraction of out-edges.
std::vector<Polynomial> tree_constants_symbolic(const ReactionGraph& g);

/// K_{G,i} at numeric rates, from signed minors of each component's
/// Laplacian: (-1)^(i-1) times the minor without the last row and column i,
/// with i the 1-based position of the node in its component.
std::vector<Rational> tree_constants_eval(const ReactionGraph& g, std::span<const Rational> kappa);

/// prod_j K_j^{lhs exponent} = prod_j K_j^{rhs exponent}; exponents positive.
struct Relation {
  std::vector<std::pair<std::size_t, Integer>> lhs;
  std::vector<std::pair<std::size_t, Integer>> rhs;
};

struct ExpandedRelation {
  Polynomial lhs;
  Polynomial rhs;
};

struct BalanceConditions {
  std::vector<std::vector<Integer>> basis;
  std::vector<Relation> relations;
  std::vector<Polynomial> tree_constants;
  /// Present when requested; the relations with K substituted.
  std::optional<std::vector<ExpandedRelation>> expanded;
};

/// Relations from a basis vector u: positive entries to the left, negative to
/// the right.
Relation relation_from_vector(std::span<const Integer> u);

/// One relation per kernel vector of the Cayley matrix. Requires weak
/// reversibility.
BalanceConditions balance_conditions(const ReactionGraph& g, bool expand = false);

struct RelationValue {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct BalanceCheck {
  bool balanced = false;
  std::vector<Rational> tree_constants;
  std::vector<RelationValue> relations;
};

/// Exact test of every relation at kappa.
BalanceCheck check_kappa_balanced(const ReactionGraph& g, std::span<const Rational> kappa);
/// Same test against a caller-supplied rational basis of ker A_G.
BalanceCheck check_kappa_balanced(const ReactionGraph& g, std::span<const Rational> kappa,
                                  const std::vector<std::vector<Rational>>& basis);

/// The binomial lhs_coeff * x^lhs_monomial = rhs_coeff * x^rhs_monomial
/// attached to one edge i -> j: K_j x^{Y_i} = K_i x^{Y_j}.
struct Binomial {
  std::size_t edge = 0;
  std::size_t source_node = 0;
  std::size_t target_node = 0;
  Rational lhs_coeff;
  Complex lhs_monomial;
  Rational rhs_coeff;
  Complex rhs_monomial;
};

std::vector<Binomial> steady_state_binomials(const ReactionGraph& g, std::span<const Rational> kappa);

struct SteadyStateSolution {
  bool feasible = false;
  /// Minimum-norm solution of the log-linear system, exponentiated.
  std::vector<double> x;
  /// Infinity norm of the log-linear residual.
  double residual = 0.0;
};

constexpr double kLogResidualTolerance = 1e-9;

/// Solves (Y_j - Y_i) . xi = log K_j - log K_i over all edges by least squares
/// and accepts when the residual is below kLogResidualTolerance.
SteadyStateSolution solve_positive_steady_state(const ReactionGraph& g, std::span<const Rational> kappa);

/// C_G times a rate vector.
template <class Scalar>
std::vector<Scalar> node_balance_residual(const ReactionGraph& g, std::span<const Scalar> rates) {
  if (rates.size() != g.num_edges()) throw DimensionError("rate vector length does not match edge count");
  return g.incidence_matrix().apply<Scalar>(rates);
}

/// rho(x): m x m, entry (i, j) = v_k(x) for the reaction y_j -> y_i.
RationalMatrix rate_matrix(const ReactionNetwork& net, std::span<const Rational> x, std::span<const Rational> kappa);

/// iota_G(rho): m_G x m_G, entry (a, b) = v_k for the edge b -> a of G.
RationalMatrix node_rate_matrix(const ReactionGraph& g, const RationalMatrix& rho);

struct SymmetryCheck {
  RationalMatrix rho;
  RationalMatrix node_rates;
  std::vector<Rational> inflow;   // Omega_G(rho)
  std::vector<Rational> outflow;  // Omega_G(rho^T)
  std::vector<Rational> difference;
  bool symmetric = false;
};

SymmetryCheck omega_symmetry_check(const ReactionGraph& g, std::span<const Rational> x,
                                   std::span<const Rational> kappa);

struct IncrementalCondition {
  StepKind kind = StepKind::DifferentComponents;
  ReactionGraph joined;
  /// K_{i1} = K_{i2} with their common monomial factor divided out; present
  /// only when the nodes share a component.
  std::optional<ExpandedRelation> identity;
};

IncrementalCondition incremental_condition(const ReactionGraph& g, std::size_t i1, std::size_t i2);

/// kappa_j = flux_j / x^{source_j}; flux must be a positive vector in ker C_G,
/// so x is node balanced for the returned rates.
std::vector<Rational> kappa_from_flux(const ReactionGraph& g, std::span<const Rational> x,
                                      std::span<const Rational> flux);

/// Positive vector in ker C_G for a weakly reversible graph: for every edge,
/// a cycle through it (edge plus a shortest return path) scaled by weights[j].
std::vector<Rational> cycle_flux(const ReactionGraph& g, std::span<const Rational> weights);

}  // namespace crn
