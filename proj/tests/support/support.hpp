#pragma once

// Fixtures, random generators and independent oracles shared by the unit,
// property and acceptance tests.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "crn/balance.hpp"
#include "crn/network.hpp"
#include "crn/partition.hpp"
#include "crn/polynomial.hpp"
#include "crn/reaction_graph.hpp"

namespace crn::testing {

// -- fixtures -------------------------------------------------------------

extern const char* const kRunningExample;
extern const char* const kFigure2Network;

NetworkPtr running_example();
NetworkPtr figure2_network();
NetworkPtr network_from(const char* text);

/// Table 1 partitions (k = 1..7), 1-based split numbering.
std::vector<Block> table1_blocks(int k);
AdmissiblePartition table1_partition(int k);
ReactionGraph table1_graph(int k);

/// The two five-node graphs of the four-species example (k = 1, 2).
ReactionGraph figure2_graph(int k);

std::vector<Rational> rationals(std::initializer_list<long> values);
std::vector<double> to_doubles(const std::vector<Rational>& v);

/// Polynomial in k1..kp from a list of monomials, each a list of 1-based
/// variable indices (repeats allowed).
Polynomial poly(std::size_t p, std::initializer_list<std::initializer_list<int>> monomials);

// -- generators -----------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  /// a/b with 1 <= a <= max_num, 1 <= b <= max_den.
  Rational positive_rational(int max_num = 20, int max_den = 10);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

std::vector<Rational> random_kappa(Rng& rng, std::size_t p);
std::vector<Rational> random_state(Rng& rng, std::size_t n);

/// Random valid network with at most the given numbers of species and
/// reactions; coefficients in 0..2.
NetworkPtr random_network(Rng& rng, int max_species = 4, int max_reactions = 8);

AdmissiblePartition random_partition(Rng& rng, const NetworkPtr& net);
/// Random partition obtained by merging same-label blocks of p.
AdmissiblePartition random_coarsening(Rng& rng, const AdmissiblePartition& p);

/// Random weakly reversible reaction graph with at most max_nodes nodes; node
/// labels may repeat so the graph is generally not a complex graph.
ReactionGraph random_weakly_reversible_graph(Rng& rng, int max_nodes = 8, int num_species = 3);

/// Rate constants for which a random positive rational state is node
/// balanced: kappa_j = w_j / x^{source_j} with w a random positive
/// combination of cycles. The state is written to x_out when given.
std::vector<Rational> balanced_kappa(Rng& rng, const ReactionGraph& g, std::vector<Rational>* x_out = nullptr);

// -- oracles --------------------------------------------------------------

/// All set partitions of `elements` by recursive insertion.
std::vector<std::vector<Block>> brute_force_set_partitions(const Block& elements);
/// Sum of Stirling numbers of the second kind.
Integer bell_by_stirling(std::size_t n);

/// Exact phase-one simplex: is there z > 0 with C z = 0?
bool has_positive_kernel_vector(const IntMatrix& c);

/// Floyd-Warshall transitive closure.
std::vector<std::vector<bool>> reachability(const ReactionGraph& g);
bool weakly_reversible_by_reachability(const ReactionGraph& g);

/// K_{G,i} by trying every choice of one out-edge per non-root node.
Polynomial brute_force_tree_constant(const ReactionGraph& g, std::size_t node);

/// Rank of an integer matrix via Eigen's full-pivot LU in double precision.
std::size_t float_rank(const IntMatrix& m);

}  // namespace crn::testing
