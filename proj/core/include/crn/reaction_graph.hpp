#pragma once

#include <cstddef>
#include <vector>

#include "crn/partition.hpp"

namespace crn {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The node labelled digraph of an admissible partition. Node k is block k of
/// the partition; edge j realizes reaction j.
class ReactionGraph {
 public:
  explicit ReactionGraph(AdmissiblePartition partition);

  [[nodiscard]] const AdmissiblePartition& partition() const { return partition_; }
  [[nodiscard]] const ReactionNetwork& network() const { return *partition_.network(); }
  [[nodiscard]] const NetworkPtr& network_ptr() const { return partition_.network(); }

  [[nodiscard]] std::size_t num_nodes() const { return labels_.size(); }
  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  /// Complex index labelling node k.
  [[nodiscard]] std::size_t label(std::size_t k) const { return labels_[k]; }
  [[nodiscard]] const Complex& label_complex(std::size_t k) const { return network().complexes()[labels_[k]]; }

  /// m_G x p matrix; column j has -1 at the source and +1 at the target of edge j.
  [[nodiscard]] const IntMatrix& incidence_matrix() const { return incidence_; }
  /// n x m_G matrix whose column k is the label of node k.
  [[nodiscard]] IntMatrix labeling_matrix() const;

  /// Connected components (ignoring direction), numbered by smallest node.
  [[nodiscard]] std::size_t num_components() const { return components_.size(); }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  [[nodiscard]] std::size_t component_of(std::size_t k) const { return component_of_[k]; }
  /// Edges of component c, ascending.
  [[nodiscard]] std::vector<std::size_t> component_edges(std::size_t c) const;

  /// Strongly connected component id of each node (Tarjan).
  [[nodiscard]] const std::vector<std::size_t>& strong_components() const { return scc_; }
  [[nodiscard]] bool is_weakly_reversible() const { return weakly_reversible_; }
  [[nodiscard]] bool is_component_strongly_connected(std::size_t c) const;

  /// m_G - l_G - s.
  [[nodiscard]] long deficiency() const;

 private:
  AdmissiblePartition partition_;
  std::vector<std::size_t> labels_;
  std::vector<Edge> edges_;
  IntMatrix incidence_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_of_;
  std::vector<std::size_t> scc_;
  bool weakly_reversible_ = false;
};

ReactionGraph graph_from_partition(const AdmissiblePartition& partition);
ReactionGraph canonical_split_graph(const NetworkPtr& net);
ReactionGraph canonical_complex_graph(const NetworkPtr& net);
ReactionGraph detailed_graph(const NetworkPtr& net);

inline bool is_weakly_reversible(const ReactionGraph& g) { return g.is_weakly_reversible(); }
inline long deficiency(const ReactionGraph& g) { return g.deficiency(); }

/// G_small is coarser than (or equal to) G_big: every block of G_big lies in
/// a block of G_small.
bool precedes(const ReactionGraph& g_small, const ReactionGraph& g_big);

/// Surjective node map from a finer graph onto a coarser one.
struct GraphMorphism {
  ReactionGraph from;
  ReactionGraph to;
  std::vector<std::size_t> phi;

  /// 0/1 matrix B (m_to x m_from) with B(phi(i), i) = 1, so C_to = B C_from.
  [[nodiscard]] IntMatrix matrix() const;
  /// Checks edge preservation, label preservation and surjectivity.
  [[nodiscard]] bool is_valid() const;
};

/// phi(i) = block of g_small containing block i of g_big. Throws when
/// g_small is not coarser than g_big.
GraphMorphism inclusion_morphism(const ReactionGraph& g_small, const ReactionGraph& g_big);

enum class StepKind { SameComponent, DifferentComponents };

struct JoinResult {
  ReactionGraph graph;
  StepKind kind;
};

/// Merges nodes i1 and i2 (equal labels). The merged node takes the smaller
/// index; the other node is removed and later nodes shift down.
JoinResult join_nodes(const ReactionGraph& g, std::size_t i1, std::size_t i2);

}  // namespace crn
