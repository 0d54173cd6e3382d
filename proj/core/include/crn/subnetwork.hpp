#pragma once

// Splitting a network into subnetworks along disjoint reaction subsets and
// relating node balance of the parts to node balance of the whole.

#include <cstddef>
#include <span>
#include <vector>

#include "crn/reaction_graph.hpp"

namespace crn {

struct Subnetwork {
  NetworkPtr network;
  /// Parent reaction index of each local reaction.
  std::vector<std::size_t> reactions;
  /// Parent species index of each local species (the projection pi_i).
  std::vector<std::size_t> species;
};

struct SubnetworkSplit {
  NetworkPtr parent;
  /// R_1..R_l as given (0-based, sorted); complement is R_{l+1}.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> complement;
  /// N_1..N_l followed by the complementary subnetwork when it is nonempty.
  std::vector<Subnetwork> parts;

  [[nodiscard]] bool has_complement() const { return !complement.empty(); }
};

/// Validates that the subsets are nonempty, disjoint and within range.
SubnetworkSplit make_split(const NetworkPtr& net, std::vector<std::vector<std::size_t>> subsets);

/// Subnetwork generated by a set of reactions: species and complexes are
/// those that occur, in parent order; rates inherited.
Subnetwork generated_subnetwork(const ReactionNetwork& net, std::span<const std::size_t> reactions);

struct InducedGraphs {
  /// G_{N_i}: the restriction of g to the edges of each part, renumbered.
  std::vector<ReactionGraph> parts;
  /// Graph of the partition that separates g's nodes by reaction subset.
  ReactionGraph union_graph;
};

InducedGraphs induced_graphs(const ReactionGraph& g, const SubnetworkSplit& split);

struct DecompositionVerdicts {
  /// Residual wrt g vanishes and every part N_1..N_l is node balanced.
  bool first = false;
  /// Residual wrt the union graph vanishes.
  bool second = false;
  /// Every part N_1..N_{l+1} is node balanced.
  bool third = false;
  bool parent_balanced = false;
  std::vector<bool> part_balanced;

  [[nodiscard]] bool agree() const { return first == second && second == third; }
};

DecompositionVerdicts decomposition_check(const ReactionGraph& g, const SubnetworkSplit& split,
                                          std::span<const Rational> kappa, std::span<const Rational> x);

struct JointFeasibility {
  /// Some positive kappa and x are node balanced for every part at once.
  bool feasible = false;
  std::vector<bool> part_weakly_reversible;
  /// A witness kappa (x = 1) when feasible.
  std::vector<Rational> witness_kappa;
};

JointFeasibility joint_balance_feasibility(const ReactionGraph& g, const SubnetworkSplit& split);

}  // namespace crn
