#include "crn/subnetwork.hpp"

#include <algorithm>
#include <map>

#include "crn/balance.hpp"

namespace crn {

Subnetwork generated_subnetwork(const ReactionNetwork& net, std::span<const std::size_t> reactions) {
  std::vector<bool> species_used(net.num_species(), false);
  std::vector<bool> complex_used(net.num_complexes(), false);
  for (std::size_t j : reactions) {
    if (j >= net.num_reactions()) throw ValidationError("reaction index out of range");
    const auto& r = net.reactions()[j];
    complex_used[r.source] = complex_used[r.target] = true;
  }
  Subnetwork out;
  std::vector<std::size_t> local_species(net.num_species());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < net.num_species(); ++i) {
    for (std::size_t k = 0; k < net.num_complexes(); ++k)
      if (complex_used[k] && net.complexes()[k][i] > 0) species_used[i] = true;
    if (species_used[i]) {
      local_species[i] = out.species.size();
      out.species.push_back(i);
      names.push_back(net.species()[i]);
    }
  }
  std::vector<std::size_t> local_complex(net.num_complexes());
  std::vector<Complex> complexes;
  for (std::size_t k = 0; k < net.num_complexes(); ++k) {
    if (!complex_used[k]) continue;
    local_complex[k] = complexes.size();
    Complex c;
    for (std::size_t i : out.species) c.push_back(net.complexes()[k][i]);
    complexes.push_back(std::move(c));
  }
  std::vector<Reaction> local;
  for (std::size_t j : reactions) {
    const auto& r = net.reactions()[j];
    local.push_back({local_complex[r.source], local_complex[r.target], r.rate});
    out.reactions.push_back(j);
  }
  out.network = std::make_shared<const ReactionNetwork>(std::move(names), std::move(complexes), std::move(local));
  return out;
}

SubnetworkSplit make_split(const NetworkPtr& net, std::vector<std::vector<std::size_t>> subsets) {
  SubnetworkSplit split;
  split.parent = net;
  std::vector<bool> taken(net->num_reactions(), false);
  for (auto& s : subsets) {
    if (s.empty()) throw ValidationError("empty reaction subset");
    std::sort(s.begin(), s.end());
    for (std::size_t j : s) {
      if (j >= net->num_reactions()) throw ValidationError("reaction index out of range in subset");
      if (taken[j]) throw ValidationError("reaction subsets overlap at reaction " + std::to_string(j + 1));
      taken[j] = true;
    }
  }
  split.subsets = std::move(subsets);
  for (std::size_t j = 0; j < net->num_reactions(); ++j)
    if (!taken[j]) split.complement.push_back(j);
  for (const auto& s : split.subsets) split.parts.push_back(generated_subnetwork(*net, s));
  if (split.has_complement()) split.parts.push_back(generated_subnetwork(*net, split.complement));
  return split;
}

namespace {

void require_same_network(const ReactionGraph& g, const SubnetworkSplit& split) {
  if (g.network_ptr() != split.parent && !(g.network() == *split.parent))
    throw ValidationError("split and graph belong to different networks");
}

std::vector<Rational> project(const Subnetwork& part, std::span<const Rational> values, bool species) {
  std::vector<Rational> out;
  for (std::size_t i : species ? part.species : part.reactions) out.push_back(values[i]);
  return out;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace

InducedGraphs induced_graphs(const ReactionGraph& g, const SubnetworkSplit& split) {
  require_same_network(g, split);
  const auto& blocks = g.partition().blocks();
  std::vector<ReactionGraph> parts;
  for (const auto& part : split.parts) {
    std::map<std::size_t, std::size_t> local;  // parent split node -> local split node
    for (std::size_t r = 0; r < part.reactions.size(); ++r) {
      local[2 * part.reactions[r]] = 2 * r;
      local[2 * part.reactions[r] + 1] = 2 * r + 1;
    }
    std::vector<Block> restricted;
    for (const auto& b : blocks) {
      Block nb;
      for (std::size_t i : b)
        if (auto it = local.find(i); it != local.end()) nb.push_back(it->second);
      if (!nb.empty()) restricted.push_back(std::move(nb));
    }
    parts.emplace_back(AdmissiblePartition(part.network, std::move(restricted)));
  }

  std::vector<std::size_t> subset_of(g.num_edges(), split.subsets.size());
  for (std::size_t s = 0; s < split.subsets.size(); ++s)
    for (std::size_t j : split.subsets[s]) subset_of[j] = s;
  std::vector<Block> refined;
  for (const auto& b : blocks) {
    std::map<std::size_t, Block> by_subset;
    for (std::size_t i : b) by_subset[subset_of[i / 2]].push_back(i);
    for (auto& [s, nb] : by_subset) refined.push_back(std::move(nb));
  }
  AdmissiblePartition union_partition = AdmissiblePartition(g.network_ptr(), std::move(refined)).canonical();
  return InducedGraphs{std::move(parts), ReactionGraph(std::move(union_partition))};
}

DecompositionVerdicts decomposition_check(const ReactionGraph& g, const SubnetworkSplit& split,
                                          std::span<const Rational> kappa, std::span<const Rational> x) {
  const auto induced = induced_graphs(g, split);
  const auto& net = g.network();
  const auto v = mass_action_rates<Rational>(net, x, kappa);

  DecompositionVerdicts out;
  out.parent_balanced = all_zero(node_balance_residual<Rational>(g, v));
  const bool union_balanced = all_zero(node_balance_residual<Rational>(induced.union_graph, v));
  for (std::size_t i = 0; i < split.parts.size(); ++i) {
    const auto& part = split.parts[i];
    const auto xi = project(part, x, true);
    const auto ki = project(part, kappa, false);
    const auto vi = mass_action_rates<Rational>(*part.network, xi, ki);
    out.part_balanced.push_back(all_zero(node_balance_residual<Rational>(induced.parts[i], vi)));
  }
  const std::size_t given = split.subsets.size();
  out.first = out.parent_balanced &&
              std::all_of(out.part_balanced.begin(), out.part_balanced.begin() + static_cast<std::ptrdiff_t>(given),
                          [](bool b) { return b; });
  out.second = union_balanced;
  out.third = std::all_of(out.part_balanced.begin(), out.part_balanced.end(), [](bool b) { return b; });
  return out;
}

JointFeasibility joint_balance_feasibility(const ReactionGraph& g, const SubnetworkSplit& split) {
  const auto induced = induced_graphs(g, split);
  JointFeasibility out;
  for (const auto& part : induced.parts) out.part_weakly_reversible.push_back(part.is_weakly_reversible());
  // A positive balanced flux on every part is a positive kernel vector of the
  // union graph's incidence matrix, which exists iff that graph is weakly
  // reversible.
  out.feasible = induced.union_graph.is_weakly_reversible();
  if (out.feasible) {
    const std::vector<Rational> ones(g.num_edges(), Rational(1));
    const std::vector<Rational> unit_state(g.network().num_species(), Rational(1));
    out.witness_kappa = kappa_from_flux(induced.union_graph, unit_state, cycle_flux(induced.union_graph, ones));
  }
  return out;
}

}  // namespace crn
