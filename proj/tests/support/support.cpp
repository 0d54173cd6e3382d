#include "support.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crn::testing {

const char* const kRunningExample = R"(species: X1 X2
r1: 3 X1 -> X1 + 2 X2
r2: X1 + 2 X2 -> 3 X2
r3: 3 X2 -> 2 X1 + X2
r4: 2 X1 + X2 -> 3 X1
r5: 3 X1 -> 3 X2
r6: 3 X2 -> 3 X1
)";

const char* const kFigure2Network = R"(species: X1 X2 X3 X4
r1: X1 -> X2
r2: X2 -> X1
r3: X3 -> X1
r4: X1 -> X3
r5: X2 -> X3
r6: X3 -> X2
r7: X2 -> X4
r8: X4 -> X3
)";

NetworkPtr network_from(const char* text) { return std::make_shared<const ReactionNetwork>(parse_network(text)); }

NetworkPtr running_example() {
  static const NetworkPtr net = network_from(kRunningExample);
  return net;
}

NetworkPtr figure2_network() {
  static const NetworkPtr net = network_from(kFigure2Network);
  return net;
}

std::vector<Block> table1_blocks(int k) {
  switch (k) {
    case 1: return {{1, 8, 9, 12}, {2, 3}, {4, 5, 10, 11}, {6, 7}};
    case 2: return {{1, 12}, {2, 3}, {4, 5, 10, 11}, {6, 7}, {8, 9}};
    case 3: return {{1, 12}, {2, 3}, {4, 11}, {6, 7}, {8, 9}, {5, 10}};
    case 4: return {{1, 8}, {2, 3}, {4, 5, 10, 11}, {6, 7}, {9, 12}};
    case 5: return {{1}, {2, 3}, {4, 5, 10, 11}, {6, 7}, {8}, {9}, {12}};
    case 6: return {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9, 12}, {10, 11}};
    case 7: return {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {12}};
    default: throw std::out_of_range("Table 1 has rows 1..7");
  }
}

AdmissiblePartition table1_partition(int k) {
  return AdmissiblePartition::from_one_based(running_example(), table1_blocks(k));
}

ReactionGraph table1_graph(int k) { return ReactionGraph(table1_partition(k)); }

ReactionGraph figure2_graph(int k) {
  std::vector<Block> blocks;
  if (k == 1) blocks = {{1, 4, 6, 7}, {2, 3, 9}, {5, 8, 10, 11, 16}, {12, 13}, {14, 15}};
  else if (k == 2) blocks = {{1, 4, 6, 7}, {2, 3}, {5, 8, 10, 11, 16}, {9, 12, 13}, {14, 15}};
  else throw std::out_of_range("figure graphs are 1 and 2");
  return ReactionGraph(AdmissiblePartition::from_one_based(figure2_network(), blocks));
}

std::vector<Rational> rationals(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

Polynomial poly(std::size_t p, std::initializer_list<std::initializer_list<int>> monomials) {
  Polynomial out(p);
  for (const auto& m : monomials) {
    Exponents e(p, 0);
    for (int v : m) e.at(static_cast<std::size_t>(v - 1)) += 1;
    out.add_term(e, 1);
  }
  return out;
}

Rational Rng::positive_rational(int max_num, int max_den) {
  Rational q(uniform(1, max_num), uniform(1, max_den));
  q.canonicalize();
  return q;
}

std::vector<Rational> random_kappa(Rng& rng, std::size_t p) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < p; ++j) out.push_back(rng.positive_rational());
  return out;
}

std::vector<Rational> random_state(Rng& rng, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.positive_rational(9, 4));
  return out;
}

namespace {

// Builds a network from (source, target) complex pairs, dropping species that
// never occur and numbering complexes by first appearance.
NetworkPtr assemble(std::size_t n, const std::vector<std::pair<Complex, Complex>>& pairs) {
  std::vector<bool> used(n, false);
  for (const auto& [a, b] : pairs)
    for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || a[i] > 0 || b[i] > 0;
  std::vector<std::string> names;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (used[i]) {
      keep.push_back(i);
      names.push_back("S" + std::to_string(names.size() + 1));
    }
  auto shrink = [&](const Complex& c) {
    Complex out;
    for (std::size_t i : keep) out.push_back(c[i]);
    return out;
  };
  std::vector<Complex> complexes;
  auto index_of = [&](const Complex& c) {
    for (std::size_t k = 0; k < complexes.size(); ++k)
      if (complexes[k] == c) return k;
    complexes.push_back(c);
    return complexes.size() - 1;
  };
  std::vector<Reaction> reactions;
  for (const auto& [a, b] : pairs) {
    const std::size_t s = index_of(shrink(a));
    const std::size_t t = index_of(shrink(b));
    reactions.push_back({s, t, RateValue("k" + std::to_string(reactions.size() + 1))});
  }
  return std::make_shared<const ReactionNetwork>(std::move(names), std::move(complexes), std::move(reactions));
}

Complex random_complex(Rng& rng, std::size_t n) {
  Complex c(n);
  for (auto& v : c) v = rng.uniform(0, 2);
  return c;
}

}  // namespace

NetworkPtr random_network(Rng& rng, int max_species, int max_reactions) {
  while (true) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, max_species));
    const int p = rng.uniform(1, max_reactions);
    // A small pool of complexes makes shared labels (and hence interesting
    // partitions) likely.
    std::vector<Complex> pool;
    const int pool_size = rng.uniform(2, std::max(2, p));
    for (int k = 0; k < pool_size; ++k) pool.push_back(random_complex(rng, n));
    std::vector<std::pair<Complex, Complex>> pairs;
    std::set<std::pair<Complex, Complex>> seen;
    for (int attempt = 0; attempt < 50 && static_cast<int>(pairs.size()) < p; ++attempt) {
      const auto& a = pool[static_cast<std::size_t>(rng.uniform(0, pool_size - 1))];
      const auto& b = pool[static_cast<std::size_t>(rng.uniform(0, pool_size - 1))];
      if (a == b || !seen.insert({a, b}).second) continue;
      pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    bool nonzero = false;
    for (const auto& [a, b] : pairs)
      for (std::size_t i = 0; i < n; ++i) nonzero = nonzero || a[i] > 0 || b[i] > 0;
    if (!nonzero) continue;
    return assemble(n, pairs);
  }
}

AdmissiblePartition random_partition(Rng& rng, const NetworkPtr& net) {
  std::map<std::size_t, std::vector<Block>> by_label;
  for (std::size_t i = 0; i < split_count(*net); ++i) {
    auto& blocks = by_label[split_label(*net, i)];
    const int choice = rng.uniform(0, static_cast<int>(blocks.size()));
    if (choice == static_cast<int>(blocks.size())) blocks.push_back({i});
    else blocks[static_cast<std::size_t>(choice)].push_back(i);
  }
  std::vector<Block> all;
  for (auto& [label, blocks] : by_label)
    for (auto& b : blocks) all.push_back(std::move(b));
  std::shuffle(all.begin(), all.end(), rng.engine());
  return AdmissiblePartition(net, std::move(all));
}

AdmissiblePartition random_coarsening(Rng& rng, const AdmissiblePartition& p) {
  std::vector<Block> blocks = p.blocks();
  const int merges = rng.uniform(0, static_cast<int>(blocks.size()));
  for (int t = 0; t < merges; ++t) {
    const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(blocks.size()) - 1));
    const auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(blocks.size()) - 1));
    if (a == b) continue;
    if (split_label(*p.network(), blocks[a].front()) != split_label(*p.network(), blocks[b].front())) continue;
    blocks[a].insert(blocks[a].end(), blocks[b].begin(), blocks[b].end());
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return AdmissiblePartition(p.network(), std::move(blocks));
}

ReactionGraph random_weakly_reversible_graph(Rng& rng, int max_nodes, int num_species) {
  const auto n = static_cast<std::size_t>(num_species);
  while (true) {
    const int m = rng.uniform(2, max_nodes);
    std::vector<Complex> pool;
    const int pool_size = rng.uniform(2, m);
    for (int k = 0; k < pool_size; ++k) pool.push_back(random_complex(rng, n));
    std::vector<std::size_t> label(static_cast<std::size_t>(m));
    for (auto& l : label) l = static_cast<std::size_t>(rng.uniform(0, pool_size - 1));

    // Random components of size >= 2.
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng.engine());
    std::vector<std::vector<int>> comps;
    for (std::size_t k = 0; k < order.size();) {
      const auto remaining = static_cast<int>(order.size() - k);
      int size = remaining <= 3 ? remaining : rng.uniform(2, remaining - 2);
      comps.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(k),
                         order.begin() + static_cast<std::ptrdiff_t>(k) + size);
      k += static_cast<std::size_t>(size);
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& c : comps) {
      for (std::size_t k = 0; k < c.size(); ++k) edges.emplace_back(c[k], c[(k + 1) % c.size()]);
      const int extra = rng.uniform(0, static_cast<int>(c.size()));
      for (int t = 0; t < extra; ++t) {
        int a = c[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(c.size()) - 1))];
        int b = c[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(c.size()) - 1))];
        if (a != b) edges.emplace_back(a, b);
      }
    }
    std::shuffle(edges.begin(), edges.end(), rng.engine());

    bool ok = true;
    std::set<std::pair<std::size_t, std::size_t>> label_pairs;
    std::vector<std::pair<Complex, Complex>> pairs;
    for (auto [a, b] : edges) {
      const auto la = label[static_cast<std::size_t>(a)];
      const auto lb = label[static_cast<std::size_t>(b)];
      if (la == lb || !label_pairs.insert({la, lb}).second || pool[la] == pool[lb]) {
        ok = false;
        break;
      }
      pairs.emplace_back(pool[la], pool[lb]);
    }
    if (!ok) continue;
    bool nonzero = false;
    for (const auto& c : pool)
      for (int v : c) nonzero = nonzero || v > 0;
    if (!nonzero) continue;

    NetworkPtr net;
    try {
      net = assemble(n, pairs);
    } catch (const Error&) {
      continue;
    }
    std::vector<Block> blocks(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < edges.size(); ++j) {
      blocks[static_cast<std::size_t>(edges[j].first)].push_back(2 * j);
      blocks[static_cast<std::size_t>(edges[j].second)].push_back(2 * j + 1);
    }
    ReactionGraph g{AdmissiblePartition(net, std::move(blocks))};
    if (!g.is_weakly_reversible()) throw std::logic_error("generator produced a graph that is not weakly reversible");
    return g;
  }
}

std::vector<Rational> balanced_kappa(Rng& rng, const ReactionGraph& g, std::vector<Rational>* x_out) {
  const std::size_t m = g.num_nodes();
  std::vector<std::vector<std::size_t>> out_edges(m);
  for (std::size_t j = 0; j < g.num_edges(); ++j) out_edges[g.edges()[j].source].push_back(j);

  // Flux: for every edge a random positive weight on a cycle through it, the
  // return path found by depth-first search.
  std::vector<Rational> flux(g.num_edges(), Rational(0));
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const auto& e = g.edges()[j];
    std::vector<std::size_t> path;
    std::vector<bool> visited(m, false);
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
      if (v == e.source) return true;
      visited[v] = true;
      for (std::size_t k : out_edges[v]) {
        const std::size_t w = g.edges()[k].target;
        if (visited[w]) continue;
        path.push_back(k);
        if (dfs(w)) return true;
        path.pop_back();
      }
      return false;
    };
    if (!dfs(e.target)) throw std::logic_error("edge lies on no cycle");
    const Rational w = rng.positive_rational();
    flux[j] += w;
    for (std::size_t k : path) flux[k] += w;
  }
  auto x = random_state(rng, g.network().num_species());
  std::vector<Rational> kappa;
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    Rational mono = 1;
    const auto& y = g.network().source(j);
    for (std::size_t i = 0; i < y.size(); ++i)
      for (int t = 0; t < y[i]; ++t) mono *= x[i];
    kappa.push_back(flux[j] / mono);
  }
  if (x_out) *x_out = std::move(x);
  return kappa;
}

std::vector<std::vector<Block>> brute_force_set_partitions(const Block& elements) {
  std::vector<std::vector<Block>> out{{}};
  for (std::size_t e : elements) {
    std::vector<std::vector<Block>> next;
    for (const auto& part : out) {
      for (std::size_t b = 0; b < part.size(); ++b) {
        auto copy = part;
        copy[b].push_back(e);
        next.push_back(std::move(copy));
      }
      auto copy = part;
      copy.push_back({e});
      next.push_back(std::move(copy));
    }
    out = std::move(next);
  }
  return out;
}

Integer bell_by_stirling(std::size_t n) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= i; ++k) s[i][k] = Integer(static_cast<unsigned long>(k)) * s[i - 1][k] + s[i - 1][k - 1];
  Integer total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += s[n][k];
  return total;
}

bool has_positive_kernel_vector(const IntMatrix& c) {
  // z = 1 + w with w >= 0 turns C z = 0 into C w = -C 1. Phase one with one
  // artificial per row, Bland's rule.
  const std::size_t rows = c.rows();
  const std::size_t cols = c.cols();
  if (cols == 0) return false;
  const std::size_t width = cols + rows + 1;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    Rational rhs = 0;
    for (std::size_t j = 0; j < cols; ++j) rhs -= Rational(c(r, j));
    const int sign = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < cols; ++j) t[r][j] = Rational(c(r, j)) * sign;
    t[r][cols + r] = 1;
    t[r][width - 1] = rhs * sign;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

  while (true) {
    // Reduced costs of the phase-one objective (sum of artificials).
    std::size_t entering = width;
    for (std::size_t j = 0; j + 1 < width && entering == width; ++j) {
      if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
      Rational reduced = j >= cols ? Rational(1) : Rational(0);
      for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= cols) reduced -= t[r][j];
      if (reduced < 0) entering = j;
    }
    if (entering == width) break;
    std::size_t leaving = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][entering] <= 0) continue;
      Rational ratio = t[r][width - 1] / t[r][entering];
      if (leaving == rows || ratio < best || (ratio == best && basis[r] < basis[leaving])) {
        leaving = r;
        best = ratio;
      }
    }
    if (leaving == rows) break;  // unbounded direction cannot occur in phase one
    const Rational pivot = t[leaving][entering];
    for (auto& v : t[leaving]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || t[r][entering] == 0) continue;
      const Rational f = t[r][entering];
      for (std::size_t j = 0; j < width; ++j) t[r][j] -= f * t[leaving][j];
    }
    basis[leaving] = entering;
  }
  Rational infeasibility = 0;
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] >= cols) infeasibility += t[r][width - 1];
  return infeasibility == 0;
}

std::vector<std::vector<bool>> reachability(const ReactionGraph& g) {
  const std::size_t m = g.num_nodes();
  std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < m; ++k) r[k][k] = true;
  for (const auto& e : g.edges()) r[e.source][e.target] = true;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < m; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

bool weakly_reversible_by_reachability(const ReactionGraph& g) {
  const auto r = reachability(g);
  for (const auto& e : g.edges())
    if (!r[e.target][e.source]) return false;
  return true;
}

Polynomial brute_force_tree_constant(const ReactionGraph& g, std::size_t root) {
  const std::size_t p = g.num_edges();
  const auto& nodes = g.components()[g.component_of(root)];
  std::vector<std::size_t> others;
  for (std::size_t k : nodes)
    if (k != root) others.push_back(k);
  std::vector<std::vector<std::size_t>> choices;
  for (std::size_t k : others) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < g.num_edges(); ++j)
      if (g.edges()[j].source == k) out.push_back(j);
    if (out.empty()) return Polynomial(p);
    choices.push_back(std::move(out));
  }
  Polynomial total(p);
  std::vector<std::size_t> pick(others.size(), 0);
  std::map<std::size_t, std::size_t> next;
  while (true) {
    for (std::size_t t = 0; t < others.size(); ++t) next[others[t]] = g.edges()[choices[t][pick[t]]].target;
    bool tree = true;
    for (std::size_t start : others) {
      std::size_t v = start;
      std::size_t steps = 0;
      while (v != root && steps <= nodes.size()) {
        v = next[v];
        ++steps;
      }
      if (v != root) {
        tree = false;
        break;
      }
    }
    if (tree) {
      Exponents e(p, 0);
      for (std::size_t t = 0; t < others.size(); ++t) e[choices[t][pick[t]]] += 1;
      total.add_term(e, 1);
    }
    std::size_t t = 0;
    while (t < pick.size() && ++pick[t] == choices[t].size()) pick[t++] = 0;
    if (t == pick.size()) break;
  }
  return total;
}

std::size_t float_rank(const IntMatrix& m) {
  Eigen::MatrixXd d(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  if (d.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
  return static_cast<std::size_t>(lu.rank());
}

}  // namespace crn::testing
