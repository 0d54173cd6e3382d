#include "crn/lift.hpp"

#include <algorithm>
#include <numeric>

#include "crn/balance.hpp"

namespace crn {

LiftedNetwork::LiftedNetwork(ReactionGraph graph, int epsilon, NetworkPtr lifted)
    : graph_(std::move(graph)), epsilon_(epsilon), lifted_(std::move(lifted)) {}

std::vector<Rational> LiftedNetwork::lift_kappa(std::span<const Rational> kappa, const Rational& exchange) const {
  if (kappa.size() != graph_.num_edges()) throw DimensionError("rate vector length does not match reaction count");
  std::vector<Rational> out(kappa.begin(), kappa.end());
  out.resize(lifted_->num_reactions(), exchange);
  return out;
}

LiftedNetwork lift_network(const ReactionGraph& g) {
  const auto& net = g.network();
  const std::size_t n = net.num_species();
  const std::size_t m = g.num_nodes();
  int max_degree = 0;
  for (const auto& c : net.complexes()) max_degree = std::max(max_degree, std::accumulate(c.begin(), c.end(), 0));
  const int epsilon = 1 + max_degree;

  std::size_t zero_nodes = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& y = g.label_complex(k);
    if (std::all_of(y.begin(), y.end(), [](int v) { return v == 0; })) ++zero_nodes;
  }
  if (zero_nodes > 1) throw ValidationError("lift needs at most one node labelled by the zero complex");

  auto index = [m](std::size_t i, std::size_t j) { return i * m + j; };
  std::vector<std::string> species;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) species.push_back(net.species()[i] + "." + std::to_string(j + 1));

  std::vector<Complex> complexes;
  for (std::size_t j = 0; j < m; ++j) {
    Complex c(n * m, 0);
    const auto& y = g.label_complex(j);
    for (std::size_t i = 0; i < n; ++i) c[index(i, j)] = y[i];
    complexes.push_back(std::move(c));
  }
  const std::size_t exchange_base = complexes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Complex c(n * m, 0);
      c[index(i, j)] = epsilon;
      complexes.push_back(std::move(c));
    }

  std::vector<Reaction> reactions;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    reactions.push_back({g.edges()[e].source, g.edges()[e].target, RateValue("k" + std::to_string(e + 1))});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t j2 = 0; j2 < m; ++j2)
        if (j != j2)
          reactions.push_back({exchange_base + index(i, j), exchange_base + index(i, j2), RateValue(Rational(1))});

  auto lifted = std::make_shared<const ReactionNetwork>(std::move(species), std::move(complexes), std::move(reactions));
  return LiftedNetwork(g, epsilon, std::move(lifted));
}

LiftVerification verify_lift(const LiftedNetwork& lift, std::span<const Rational> kappa, std::span<const Rational> x) {
  const auto& g = lift.graph();
  const auto& base = lift.base();
  LiftVerification out;

  const auto v = mass_action_rates<Rational>(base, x, kappa);
  const auto node_residual = node_balance_residual<Rational>(g, v);
  out.node_balanced = std::all_of(node_residual.begin(), node_residual.end(), [](const Rational& q) { return q == 0; });

  const auto gx = lift.replicate<Rational>(x);
  const auto kappa_lift = lift.lift_kappa(kappa);
  const auto v_lift = mass_action_rates<Rational>(*lift.network(), gx, kappa_lift);
  const ReactionGraph lifted_complex_graph = canonical_complex_graph(lift.network());
  const auto lifted_residual = node_balance_residual<Rational>(lifted_complex_graph, v_lift);
  out.complex_balanced =
      std::all_of(lifted_residual.begin(), lifted_residual.end(), [](const Rational& q) { return q == 0; });

  out.residual_identity = lifted_residual.size() >= node_residual.size();
  for (std::size_t k = 0; out.residual_identity && k < lifted_residual.size(); ++k) {
    const Rational expected = k < node_residual.size() ? node_residual[k] : Rational(0);
    out.residual_identity = lifted_residual[k] == expected;
  }

  const auto back = lift.collapse<Rational>(gx);
  out.projection_identity = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    out.projection_identity = out.projection_identity && back[i] == x[i] * static_cast<unsigned long>(g.num_nodes());
  return out;
}

}  // namespace crn
