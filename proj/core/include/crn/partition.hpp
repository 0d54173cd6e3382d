#pragma once

// Admissible partitions of the split nodes of a network.
//
// Split node 2j (0-based) is the source of reaction j and split node 2j+1 its
// target, so a network with p reactions has 2p split nodes. Public functions
// work with 0-based indices; from_one_based/one_based convert to the
// 1..2p numbering used in partition files.

#include <cstddef>
#include <functional>
#include <vector>

#include "crn/exact.hpp"
#include "crn/network.hpp"

namespace crn {

using Block = std::vector<std::size_t>;

inline std::size_t split_count(const ReactionNetwork& net) { return 2 * net.num_reactions(); }
/// Index (into the complex list) of the label of split node i.
std::size_t split_label(const ReactionNetwork& net, std::size_t i);

class AdmissiblePartition {
 public:
  /// Validates that the blocks are disjoint, nonempty, cover 0..2p-1 and that
  /// each block carries a single label. Block order is kept; each block is
  /// stored sorted.
  AdmissiblePartition(NetworkPtr net, std::vector<Block> blocks);
  static AdmissiblePartition from_one_based(NetworkPtr net, const std::vector<Block>& blocks);

  [[nodiscard]] const NetworkPtr& network() const { return net_; }
  [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
  [[nodiscard]] std::size_t size() const { return blocks_.size(); }
  [[nodiscard]] std::size_t block_of(std::size_t split) const { return owner_[split]; }
  /// Complex index shared by the members of block b.
  [[nodiscard]] std::size_t block_label(std::size_t b) const { return split_label(*net_, blocks_[b].front()); }

  [[nodiscard]] std::vector<Block> one_based() const;

  /// Same partition with blocks ordered by their smallest element.
  [[nodiscard]] AdmissiblePartition canonical() const;
  /// Equal as set partitions (block order ignored).
  [[nodiscard]] bool equivalent(const AdmissiblePartition& other) const;

  /// Equal including block order.
  friend bool operator==(const AdmissiblePartition& a, const AdmissiblePartition& b) {
    return a.blocks_ == b.blocks_ && (a.net_ == b.net_ || *a.net_ == *b.net_);
  }

 private:
  NetworkPtr net_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> owner_;
};

/// Every split node in its own block.
AdmissiblePartition singleton_partition(NetworkPtr net);
/// One block per complex, in complex numbering.
AdmissiblePartition complex_partition(NetworkPtr net);
/// One component per reversible pair and per irreversible reaction.
AdmissiblePartition detailed_partition(NetworkPtr net);

/// Common refinement; blocks canonicalized.
AdmissiblePartition lattice_meet(const AdmissiblePartition& a, const AdmissiblePartition& b);
/// Finest common coarsening; blocks canonicalized.
AdmissiblePartition lattice_join(const AdmissiblePartition& a, const AdmissiblePartition& b);
/// True when every block of a lies inside a block of b.
bool refines(const AdmissiblePartition& a, const AdmissiblePartition& b);

Integer bell_number(std::size_t n);
/// Product of Bell numbers of the label classes.
Integer count_admissible_partitions(const ReactionNetwork& net);

constexpr std::size_t kDefaultPartitionCap = 100000;

/// Calls visit on every admissible partition (canonical block order) in a
/// fixed order; stops early when visit returns false. Throws
/// EnumerationLimit before generating anything if the count exceeds max_count.
void for_each_admissible_partition(const NetworkPtr& net, std::size_t max_count,
                                   const std::function<bool(const AdmissiblePartition&)>& visit);
std::vector<AdmissiblePartition> enumerate_admissible_partitions(const NetworkPtr& net,
                                                                 std::size_t max_count = kDefaultPartitionCap);

}  // namespace crn
