#include "crn/partition.hpp"

#include <algorithm>
#include <numeric>

namespace crn {

std::size_t split_label(const ReactionNetwork& net, std::size_t i) {
  const auto& r = net.reactions()[i / 2];
  return i % 2 == 0 ? r.source : r.target;
}

AdmissiblePartition::AdmissiblePartition(NetworkPtr net, std::vector<Block> blocks)
    : net_(std::move(net)), blocks_(std::move(blocks)) {
  if (!net_) throw ValidationError("partition needs a network");
  const std::size_t total = split_count(*net_);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  owner_.assign(total, unset);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& block = blocks_[b];
    if (block.empty()) throw ValidationError("empty block in partition");
    std::sort(block.begin(), block.end());
    for (std::size_t i : block) {
      if (i >= total)
        throw ValidationError("split index " + std::to_string(i + 1) + " outside 1.." + std::to_string(total));
      if (owner_[i] != unset) throw ValidationError("split index " + std::to_string(i + 1) + " in two blocks");
      owner_[i] = b;
    }
    const std::size_t label = split_label(*net_, block.front());
    for (std::size_t i : block)
      if (split_label(*net_, i) != label)
        throw ValidationError("block " + std::to_string(b + 1) + " mixes split nodes " +
                              std::to_string(block.front() + 1) + " and " + std::to_string(i + 1) +
                              " with different labels");
  }
  for (std::size_t i = 0; i < total; ++i)
    if (owner_[i] == unset) throw ValidationError("split index " + std::to_string(i + 1) + " not covered");
}

AdmissiblePartition AdmissiblePartition::from_one_based(NetworkPtr net, const std::vector<Block>& blocks) {
  std::vector<Block> zero;
  zero.reserve(blocks.size());
  for (const auto& b : blocks) {
    Block z;
    for (std::size_t i : b) {
      if (i == 0) throw ValidationError("split indices are numbered from 1");
      z.push_back(i - 1);
    }
    zero.push_back(std::move(z));
  }
  return AdmissiblePartition(std::move(net), std::move(zero));
}

std::vector<Block> AdmissiblePartition::one_based() const {
  auto out = blocks_;
  for (auto& b : out)
    for (auto& i : b) ++i;
  return out;
}

AdmissiblePartition AdmissiblePartition::canonical() const {
  auto blocks = blocks_;
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  return AdmissiblePartition(net_, std::move(blocks));
}

bool AdmissiblePartition::equivalent(const AdmissiblePartition& other) const {
  return canonical() == other.canonical();
}

AdmissiblePartition singleton_partition(NetworkPtr net) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < split_count(*net); ++i) blocks.push_back({i});
  return AdmissiblePartition(std::move(net), std::move(blocks));
}

AdmissiblePartition complex_partition(NetworkPtr net) {
  std::vector<Block> blocks(net->num_complexes());
  for (std::size_t i = 0; i < split_count(*net); ++i) blocks[split_label(*net, i)].push_back(i);
  return AdmissiblePartition(std::move(net), std::move(blocks));
}

AdmissiblePartition detailed_partition(NetworkPtr net) {
  std::vector<Block> blocks;
  std::vector<bool> done(net->num_reactions(), false);
  for (std::size_t j = 0; j < net->num_reactions(); ++j) {
    if (done[j]) continue;
    done[j] = true;
    const auto& r = net->reactions()[j];
    auto reverse = net->reaction_index(r.target, r.source);
    if (reverse) {
      done[*reverse] = true;
      blocks.push_back({2 * j, 2 * *reverse + 1});
      blocks.push_back({2 * j + 1, 2 * *reverse});
    } else {
      blocks.push_back({2 * j});
      blocks.push_back({2 * j + 1});
    }
  }
  return AdmissiblePartition(std::move(net), std::move(blocks)).canonical();
}

namespace {

void require_same_network(const AdmissiblePartition& a, const AdmissiblePartition& b) {
  if (a.network() != b.network() && !(*a.network() == *b.network()))
    throw ValidationError("partitions belong to different networks");
}

std::vector<Block> sorted_blocks(std::vector<Block> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.front() < y.front(); });
  return blocks;
}

}  // namespace

AdmissiblePartition lattice_meet(const AdmissiblePartition& a, const AdmissiblePartition& b) {
  require_same_network(a, b);
  const std::size_t total = split_count(*a.network());
  std::vector<Block> blocks;
  std::vector<std::vector<std::size_t>> slot(a.size(), std::vector<std::size_t>(b.size(), total));
  for (std::size_t i = 0; i < total; ++i) {
    auto& s = slot[a.block_of(i)][b.block_of(i)];
    if (s == total) {
      s = blocks.size();
      blocks.emplace_back();
    }
    blocks[s].push_back(i);
  }
  return AdmissiblePartition(a.network(), sorted_blocks(std::move(blocks)));
}

AdmissiblePartition lattice_join(const AdmissiblePartition& a, const AdmissiblePartition& b) {
  require_same_network(a, b);
  const std::size_t total = split_count(*a.network());
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* part : {&a, &b})
    for (const auto& block : part->blocks())
      for (std::size_t i : block) parent[find(i)] = find(block.front());
  std::vector<Block> blocks;
  std::vector<std::size_t> slot(total, total);
  for (std::size_t i = 0; i < total; ++i) {
    auto root = find(i);
    if (slot[root] == total) {
      slot[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[root]].push_back(i);
  }
  return AdmissiblePartition(a.network(), sorted_blocks(std::move(blocks)));
}

bool refines(const AdmissiblePartition& a, const AdmissiblePartition& b) {
  require_same_network(a, b);
  for (const auto& block : a.blocks()) {
    const std::size_t target = b.block_of(block.front());
    for (std::size_t i : block)
      if (b.block_of(i) != target) return false;
  }
  return true;
}

Integer bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<Integer> row{Integer(1)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

namespace {

std::vector<Block> label_classes(const ReactionNetwork& net) {
  std::vector<Block> classes(net.num_complexes());
  for (std::size_t i = 0; i < split_count(net); ++i) classes[split_label(net, i)].push_back(i);
  return classes;
}

// All restricted growth strings of length n: a[0] = 0, a[k] <= 1 + max(a[0..k)).
std::vector<std::vector<std::size_t>> restricted_growth_strings(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t max_used) {
    if (k == n) {
      out.push_back(a);
      return;
    }
    for (std::size_t v = 0; v <= max_used + 1; ++v) {
      a[k] = v;
      rec(k + 1, std::max(max_used, v));
    }
  };
  if (n == 0) return {{}};
  a[0] = 0;
  rec(1, 0);
  return out;
}

}  // namespace

Integer count_admissible_partitions(const ReactionNetwork& net) {
  Integer total = 1;
  for (const auto& c : label_classes(net)) total *= bell_number(c.size());
  return total;
}

void for_each_admissible_partition(const NetworkPtr& net, std::size_t max_count,
                                   const std::function<bool(const AdmissiblePartition&)>& visit) {
  if (max_count == 0) throw ValidationError("partition cap must be positive");
  const Integer count = count_admissible_partitions(*net);
  if (count > Integer(static_cast<unsigned long>(max_count)))
    throw EnumerationLimit(count.get_str() + " admissible partitions exceed the cap of " + std::to_string(max_count));

  const auto classes = label_classes(*net);
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (const auto& c : classes) choices.push_back(restricted_growth_strings(c.size()));
  std::vector<std::size_t> odometer(classes.size(), 0);
  while (true) {
    std::vector<Block> blocks;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& rgs = choices[c][odometer[c]];
      const std::size_t base = blocks.size();
      for (std::size_t k = 0; k < rgs.size(); ++k) {
        if (base + rgs[k] >= blocks.size()) blocks.resize(base + rgs[k] + 1);
        blocks[base + rgs[k]].push_back(classes[c][k]);
      }
    }
    if (!visit(AdmissiblePartition(net, sorted_blocks(std::move(blocks))))) return;

    // The last label class varies fastest.
    std::size_t c = classes.size();
    while (c > 0) {
      --c;
      if (++odometer[c] < choices[c].size()) break;
      odometer[c] = 0;
      if (c == 0) return;
    }
    if (classes.empty()) return;
  }
}

std::vector<AdmissiblePartition> enumerate_admissible_partitions(const NetworkPtr& net, std::size_t max_count) {
  std::vector<AdmissiblePartition> out;
  for_each_admissible_partition(net, max_count, [&](const AdmissiblePartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace crn
