#pragma once

// The lifted network: one copy of every species per node of a reaction
// graph, so that node balance of the original becomes complex balance of the
// lift.

#include <cstddef>
#include <span>
#include <vector>

#include "crn/reaction_graph.hpp"

namespace crn {

class LiftedNetwork {
 public:
  LiftedNetwork(ReactionGraph graph, int epsilon, NetworkPtr lifted);

  [[nodiscard]] const ReactionGraph& graph() const { return graph_; }
  [[nodiscard]] const ReactionNetwork& base() const { return graph_.network(); }
  [[nodiscard]] const NetworkPtr& network() const { return lifted_; }
  /// 1 + the largest total degree of a complex.
  [[nodiscard]] int epsilon() const { return epsilon_; }

  /// Index of species (X_i, j) in the lifted network.
  [[nodiscard]] std::size_t species_index(std::size_t i, std::size_t j) const { return i * graph_.num_nodes() + j; }
  /// Number of lifted reactions that come from graph edges (they come first).
  [[nodiscard]] std::size_t num_edge_reactions() const { return graph_.num_edges(); }

  /// g(x)_{ij} = x_i.
  template <class Scalar>
  [[nodiscard]] std::vector<Scalar> replicate(std::span<const Scalar> x) const;
  /// pi(x')_i = sum_j x'_{ij}.
  template <class Scalar>
  [[nodiscard]] std::vector<Scalar> collapse(std::span<const Scalar> x) const;

  /// Edge rates followed by `exchange` for every exchange reaction.
  [[nodiscard]] std::vector<Rational> lift_kappa(std::span<const Rational> kappa, const Rational& exchange = 1) const;

 private:
  ReactionGraph graph_;
  int epsilon_;
  NetworkPtr lifted_;
};

/// Builds N': complexes y^1..y^{m_G} then eps(X_i, j) in species order;
/// reactions y^i -> y^j per edge (symbolic rates k1..kp), then
/// eps(X_i, j) -> eps(X_i, j') with rate 1 for all i and j != j'.
LiftedNetwork lift_network(const ReactionGraph& g);

struct LiftVerification {
  bool node_balanced = false;
  bool complex_balanced = false;
  /// C' v'(g(x)) = (C_G v(x), 0, ..., 0).
  bool residual_identity = false;
  /// pi(g(x)) = m_G x.
  bool projection_identity = false;

  [[nodiscard]] bool ok() const {
    return node_balanced == complex_balanced && residual_identity && projection_identity;
  }
};

LiftVerification verify_lift(const LiftedNetwork& lift, std::span<const Rational> kappa, std::span<const Rational> x);

template <class Scalar>
std::vector<Scalar> LiftedNetwork::replicate(std::span<const Scalar> x) const {
  const std::size_t n = base().num_species();
  const std::size_t m = graph_.num_nodes();
  if (x.size() != n) throw DimensionError("state length does not match species count");
  std::vector<Scalar> out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[species_index(i, j)] = x[i];
  return out;
}

template <class Scalar>
std::vector<Scalar> LiftedNetwork::collapse(std::span<const Scalar> x) const {
  const std::size_t n = base().num_species();
  const std::size_t m = graph_.num_nodes();
  if (x.size() != n * m) throw DimensionError("lifted state length does not match lifted species count");
  std::vector<Scalar> out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i] += x[species_index(i, j)];
  return out;
}

}  // namespace crn
