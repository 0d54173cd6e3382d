#include "crn/reaction_graph.hpp"

#include <algorithm>
#include <numeric>

namespace crn {

namespace {

// Iterative Tarjan; returns SCC ids.
std::vector<std::size_t> tarjan(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, next_comp = 0;

  struct Frame {
    std::size_t node;
    std::size_t child;
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != unvisited) continue;
    std::vector<Frame> call{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.child < adj[f.node].size()) {
        std::size_t w = adj[f.node][f.child++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      if (low[v] == index[v]) {
        while (true) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
          if (w == v) break;
        }
        ++next_comp;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
    }
  }
  return comp;
}

}  // namespace

ReactionGraph::ReactionGraph(AdmissiblePartition partition) : partition_(std::move(partition)) {
  const auto& net = network();
  const std::size_t m = partition_.size();
  const std::size_t p = net.num_reactions();
  labels_.resize(m);
  for (std::size_t k = 0; k < m; ++k) labels_[k] = partition_.block_label(k);

  incidence_ = IntMatrix(m, p);
  edges_.reserve(p);
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t j = 0; j < p; ++j) {
    Edge e{partition_.block_of(2 * j), partition_.block_of(2 * j + 1)};
    edges_.push_back(e);
    incidence_(e.source, j) -= 1;
    incidence_(e.target, j) += 1;
    adj[e.source].push_back(e.target);
  }

  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) parent[find(e.source)] = find(e.target);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot(m, unset);
  component_of_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto r = find(k);
    if (slot[r] == unset) {
      slot[r] = components_.size();
      components_.emplace_back();
    }
    component_of_[k] = slot[r];
    components_[slot[r]].push_back(k);
  }

  scc_ = tarjan(m, adj);
  weakly_reversible_ = true;
  for (const auto& e : edges_)
    if (scc_[e.source] != scc_[e.target]) weakly_reversible_ = false;
}

IntMatrix ReactionGraph::labeling_matrix() const {
  const auto& net = network();
  IntMatrix y(net.num_species(), num_nodes());
  for (std::size_t k = 0; k < num_nodes(); ++k)
    for (std::size_t i = 0; i < net.num_species(); ++i) y(i, k) = label_complex(k)[i];
  return y;
}

std::vector<std::size_t> ReactionGraph::component_edges(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < edges_.size(); ++j)
    if (component_of_[edges_[j].source] == c) out.push_back(j);
  return out;
}

bool ReactionGraph::is_component_strongly_connected(std::size_t c) const {
  const auto& nodes = components_[c];
  for (std::size_t k : nodes)
    if (scc_[k] != scc_[nodes.front()]) return false;
  return true;
}

long ReactionGraph::deficiency() const {
  return static_cast<long>(num_nodes()) - static_cast<long>(num_components()) -
         static_cast<long>(network().rank());
}

ReactionGraph graph_from_partition(const AdmissiblePartition& partition) { return ReactionGraph(partition); }
ReactionGraph canonical_split_graph(const NetworkPtr& net) { return ReactionGraph(singleton_partition(net)); }
ReactionGraph canonical_complex_graph(const NetworkPtr& net) { return ReactionGraph(complex_partition(net)); }
ReactionGraph detailed_graph(const NetworkPtr& net) { return ReactionGraph(detailed_partition(net)); }

bool precedes(const ReactionGraph& g_small, const ReactionGraph& g_big) {
  return refines(g_big.partition(), g_small.partition());
}

IntMatrix GraphMorphism::matrix() const {
  IntMatrix b(to.num_nodes(), from.num_nodes());
  for (std::size_t i = 0; i < phi.size(); ++i) b(phi[i], i) = 1;
  return b;
}

bool GraphMorphism::is_valid() const {
  if (phi.size() != from.num_nodes()) return false;
  std::vector<bool> hit(to.num_nodes(), false);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] >= to.num_nodes()) return false;
    if (from.label(i) != to.label(phi[i])) return false;
    hit[phi[i]] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
  if (from.num_edges() != to.num_edges()) return false;
  for (std::size_t j = 0; j < from.num_edges(); ++j) {
    const auto& e = from.edges()[j];
    if (!(to.edges()[j] == Edge{phi[e.source], phi[e.target]})) return false;
  }
  return true;
}

GraphMorphism inclusion_morphism(const ReactionGraph& g_small, const ReactionGraph& g_big) {
  if (!precedes(g_small, g_big))
    throw ValidationError("inclusion morphism requires the first graph to be coarser than the second");
  std::vector<std::size_t> phi(g_big.num_nodes());
  for (std::size_t k = 0; k < g_big.num_nodes(); ++k)
    phi[k] = g_small.partition().block_of(g_big.partition().blocks()[k].front());
  return GraphMorphism{g_big, g_small, std::move(phi)};
}

JoinResult join_nodes(const ReactionGraph& g, std::size_t i1, std::size_t i2) {
  if (i1 >= g.num_nodes() || i2 >= g.num_nodes()) throw ValidationError("node index out of range");
  if (i1 == i2) throw ValidationError("cannot join a node with itself");
  if (g.label(i1) != g.label(i2)) throw ValidationError("joined nodes must carry the same label");
  const std::size_t keep = std::min(i1, i2);
  const std::size_t drop = std::max(i1, i2);
  auto blocks = g.partition().blocks();
  blocks[keep].insert(blocks[keep].end(), blocks[drop].begin(), blocks[drop].end());
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(drop));
  StepKind kind = g.component_of(i1) == g.component_of(i2) ? StepKind::SameComponent : StepKind::DifferentComponents;
  return JoinResult{ReactionGraph(AdmissiblePartition(g.network_ptr(), std::move(blocks))), kind};
}

}  // namespace crn
