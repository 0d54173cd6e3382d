#include "crn/balance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace crn {

IntMatrix cayley_matrix(const ReactionGraph& g) {
  const std::size_t n = g.network().num_species();
  IntMatrix a(n + g.num_components(), g.num_nodes());
  for (std::size_t k = 0; k < g.num_nodes(); ++k) {
    const auto& y = g.label_complex(k);
    for (std::size_t i = 0; i < n; ++i) a(i, k) = y[i];
    a(n + g.component_of(k), k) = 1;
  }
  return a;
}

std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& a) { return integer_nullspace(a); }

namespace {

void require_positive(std::span<const Rational> v, const char* what) {
  for (const auto& q : v)
    if (sgn(q) <= 0) throw DomainError(std::string(what) + " must be strictly positive");
}

void require_rates(const ReactionGraph& g, std::span<const Rational> kappa) {
  if (kappa.size() != g.num_edges()) throw DimensionError("rate vector length does not match reaction count");
  require_positive(kappa, "rate constants");
}

void require_weakly_reversible(const ReactionGraph& g) {
  if (!g.is_weakly_reversible()) throw NotWeaklyReversible("reaction graph is not weakly reversible");
}

Rational rational_power(const Rational& base, const Integer& exponent) {
  Rational out;
  unsigned long e = exponent.get_ui();
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

struct LocalEdge {
  std::size_t id;
  std::size_t source;
  std::size_t target;
  auto operator<=>(const LocalEdge&) const = default;
};

// In-arborescences rooted at `root` over the node set `nodes` (bitmask).
// Contracting the chosen out-edge of the smallest non-root node gives a
// bijection with the arborescences of the contracted graph.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(std::size_t num_vars) : vars_(num_vars) {}

  Polynomial count(std::size_t root, std::uint64_t nodes, std::vector<LocalEdge> edges) {
    std::sort(edges.begin(), edges.end());
    auto key = std::make_tuple(root, nodes, edges);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Polynomial result(vars_);
    const std::uint64_t others = nodes & ~(std::uint64_t{1} << root);
    if (others == 0) {
      result = Polynomial::constant(vars_, 1);
    } else {
      const auto v = static_cast<std::size_t>(__builtin_ctzll(others));
      for (const auto& e : edges) {
        if (e.source != v) continue;
        const std::size_t w = e.target;
        std::vector<LocalEdge> next;
        next.reserve(edges.size());
        for (const auto& f : edges) {
          if (f.source == v) continue;
          LocalEdge g = f;
          if (g.target == v) g.target = w;
          if (g.source != g.target) next.push_back(g);
        }
        Polynomial sub = count(root, nodes & ~(std::uint64_t{1} << v), std::move(next));
        if (!sub.is_zero()) result += sub * Polynomial::variable(vars_, e.id);
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::size_t vars_;
  std::map<std::tuple<std::size_t, std::uint64_t, std::vector<LocalEdge>>, Polynomial> memo_;
};

}  // namespace

RationalMatrix laplacian(const ReactionGraph& g, std::span<const Rational> kappa) {
  if (kappa.size() != g.num_edges()) throw DimensionError("rate vector length does not match reaction count");
  RationalMatrix l(g.num_nodes(), g.num_nodes());
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const auto& e = g.edges()[j];
    l(e.target, e.source) += kappa[j];
    l(e.source, e.source) -= kappa[j];
  }
  return l;
}

std::vector<Polynomial> tree_constants_symbolic(const ReactionGraph& g) {
  const std::size_t p = g.num_edges();
  std::vector<Polynomial> out(g.num_nodes(), Polynomial(p));
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    const auto& nodes = g.components()[c];
    if (nodes.size() > 64) throw std::length_error("component too large for tree enumeration");
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = k;
    std::vector<LocalEdge> edges;
    for (std::size_t j : g.component_edges(c))
      edges.push_back({j, local[g.edges()[j].source], local[g.edges()[j].target]});
    const std::uint64_t all = nodes.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nodes.size()) - 1;
    TreeEnumerator trees(p);
    for (std::size_t k = 0; k < nodes.size(); ++k) out[nodes[k]] = trees.count(k, all, edges);
  }
  return out;
}

std::vector<Rational> tree_constants_eval(const ReactionGraph& g, std::span<const Rational> kappa) {
  require_rates(g, kappa);
  const RationalMatrix full = laplacian(g, kappa);
  std::vector<Rational> out(g.num_nodes());
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    const auto& nodes = g.components()[c];
    const std::size_t size = nodes.size();
    for (std::size_t i = 0; i < size; ++i) {
      RationalMatrix minor(size - 1, size - 1);
      for (std::size_t r = 0; r + 1 < size; ++r) {
        std::size_t col = 0;
        for (std::size_t k = 0; k < size; ++k) {
          if (k == i) continue;
          minor(r, col++) = full(nodes[r], nodes[k]);
        }
      }
      Rational value = determinant(minor);
      if (i % 2 == 1) value = -value;
      if (g.is_component_strongly_connected(c) && sgn(value) <= 0)
        throw std::logic_error("nonpositive tree constant on a strongly connected component");
      out[nodes[i]] = std::move(value);
    }
  }
  return out;
}

Relation relation_from_vector(std::span<const Integer> u) {
  Relation r;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] > 0) r.lhs.emplace_back(j, u[j]);
    else if (u[j] < 0) r.rhs.emplace_back(j, Integer(-u[j]));
  }
  return r;
}

BalanceConditions balance_conditions(const ReactionGraph& g, bool expand) {
  require_weakly_reversible(g);
  BalanceConditions out;
  out.basis = integer_kernel_basis(cayley_matrix(g));
  for (const auto& u : out.basis) out.relations.push_back(relation_from_vector(u));
  out.tree_constants = tree_constants_symbolic(g);
  if (expand) {
    const std::size_t p = g.num_edges();
    std::vector<ExpandedRelation> expanded;
    auto side = [&](const std::vector<std::pair<std::size_t, Integer>>& factors) {
      Polynomial prod = Polynomial::constant(p, 1);
      for (const auto& [node, e] : factors) prod = prod * out.tree_constants[node].pow(static_cast<unsigned>(e.get_ui()));
      return prod;
    };
    for (const auto& r : out.relations) expanded.push_back({side(r.lhs), side(r.rhs)});
    out.expanded = std::move(expanded);
  }
  return out;
}

namespace {

BalanceCheck check_with_basis(const std::vector<Rational>& k, const std::vector<std::vector<Integer>>& basis) {
  BalanceCheck out;
  out.balanced = true;
  out.tree_constants = k;
  for (const auto& u : basis) {
    Relation r = relation_from_vector(u);
    RelationValue value{Rational(1), Rational(1), false};
    for (const auto& [node, e] : r.lhs) value.lhs *= rational_power(k[node], e);
    for (const auto& [node, e] : r.rhs) value.rhs *= rational_power(k[node], e);
    value.holds = value.lhs == value.rhs;
    out.balanced = out.balanced && value.holds;
    out.relations.push_back(std::move(value));
  }
  return out;
}

}  // namespace

BalanceCheck check_kappa_balanced(const ReactionGraph& g, std::span<const Rational> kappa) {
  require_weakly_reversible(g);
  auto k = tree_constants_eval(g, kappa);
  return check_with_basis(k, integer_kernel_basis(cayley_matrix(g)));
}

BalanceCheck check_kappa_balanced(const ReactionGraph& g, std::span<const Rational> kappa,
                                  const std::vector<std::vector<Rational>>& basis) {
  require_weakly_reversible(g);
  const IntMatrix a = cayley_matrix(g);
  const RationalMatrix aq = to_rational(a);
  if (static_cast<long>(basis.size()) != g.deficiency())
    throw ValidationError("kernel basis must have deficiency-many vectors");
  std::vector<std::vector<Integer>> integral;
  for (const auto& u : basis) {
    if (u.size() != g.num_nodes()) throw DimensionError("kernel vector length does not match node count");
    for (const auto& entry : aq.apply<Rational>(std::span<const Rational>(u)))
      if (entry != 0) throw ValidationError("vector is not in the kernel of the Cayley matrix");
    integral.push_back(primitive_integer_vector(u));
  }
  if (!basis.empty() && rank(RationalMatrix::from_rows(basis)) != basis.size())
    throw ValidationError("kernel basis vectors are linearly dependent");
  auto k = tree_constants_eval(g, kappa);
  return check_with_basis(k, integral);
}

std::vector<Binomial> steady_state_binomials(const ReactionGraph& g, std::span<const Rational> kappa) {
  require_weakly_reversible(g);
  const auto k = tree_constants_eval(g, kappa);
  std::vector<Binomial> out;
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const auto& e = g.edges()[j];
    out.push_back({j, e.source, e.target, k[e.target], g.label_complex(e.source), k[e.source],
                   g.label_complex(e.target)});
  }
  return out;
}

SteadyStateSolution solve_positive_steady_state(const ReactionGraph& g, std::span<const Rational> kappa) {
  require_weakly_reversible(g);
  const auto k = tree_constants_eval(g, kappa);
  const std::size_t n = g.network().num_species();
  const std::size_t p = g.num_edges();
  Eigen::MatrixXd a(p, n);
  Eigen::VectorXd b(p);
  for (std::size_t j = 0; j < p; ++j) {
    const auto& e = g.edges()[j];
    const auto& yi = g.label_complex(e.source);
    const auto& yj = g.label_complex(e.target);
    for (std::size_t s = 0; s < n; ++s) a(j, s) = yj[s] - yi[s];
    b(j) = log_of(k[e.target]) - log_of(k[e.source]);
  }
  Eigen::VectorXd xi = a.completeOrthogonalDecomposition().solve(b);
  SteadyStateSolution out;
  out.residual = p == 0 ? 0.0 : (a * xi - b).lpNorm<Eigen::Infinity>();
  out.feasible = out.residual < kLogResidualTolerance;
  out.x.resize(n);
  for (std::size_t s = 0; s < n; ++s) out.x[s] = std::exp(xi(s));
  return out;
}

RationalMatrix rate_matrix(const ReactionNetwork& net, std::span<const Rational> x, std::span<const Rational> kappa) {
  const auto v = mass_action_rates<Rational>(net, x, kappa);
  RationalMatrix rho(net.num_complexes(), net.num_complexes());
  for (std::size_t j = 0; j < net.num_reactions(); ++j) {
    const auto& r = net.reactions()[j];
    rho(r.target, r.source) = v[j];
  }
  return rho;
}

RationalMatrix node_rate_matrix(const ReactionGraph& g, const RationalMatrix& rho) {
  RationalMatrix out(g.num_nodes(), g.num_nodes());
  for (const auto& e : g.edges()) out(e.target, e.source) += rho(g.label(e.target), g.label(e.source));
  return out;
}

SymmetryCheck omega_symmetry_check(const ReactionGraph& g, std::span<const Rational> x,
                                   std::span<const Rational> kappa) {
  SymmetryCheck out;
  out.rho = rate_matrix(g.network(), x, kappa);
  out.node_rates = node_rate_matrix(g, out.rho);
  const std::size_t m = g.num_nodes();
  out.inflow.assign(m, Rational(0));
  out.outflow.assign(m, Rational(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      out.inflow[a] += out.node_rates(a, b);
      out.outflow[a] += out.node_rates(b, a);
    }
  out.symmetric = true;
  for (std::size_t a = 0; a < m; ++a) {
    out.difference.push_back(out.inflow[a] - out.outflow[a]);
    out.symmetric = out.symmetric && out.difference.back() == 0;
  }
  return out;
}

IncrementalCondition incremental_condition(const ReactionGraph& g, std::size_t i1, std::size_t i2) {
  require_weakly_reversible(g);
  auto joined = join_nodes(g, i1, i2);
  IncrementalCondition out{joined.kind, std::move(joined.graph), std::nullopt};
  if (out.kind == StepKind::SameComponent) {
    const auto k = tree_constants_symbolic(g);
    Exponents common = k[i1].monomial_gcd();
    const Exponents other = k[i2].monomial_gcd();
    for (std::size_t v = 0; v < common.size(); ++v) common[v] = std::min(common[v], other[v]);
    out.identity = ExpandedRelation{k[i1].divide_monomial(common), k[i2].divide_monomial(common)};
  }
  return out;
}

std::vector<Rational> kappa_from_flux(const ReactionGraph& g, std::span<const Rational> x,
                                      std::span<const Rational> flux) {
  const auto& net = g.network();
  if (x.size() != net.num_species()) throw DimensionError("state length does not match species count");
  if (flux.size() != g.num_edges()) throw DimensionError("flux length does not match edge count");
  require_positive(x, "state");
  require_positive(flux, "flux");
  for (const auto& r : node_balance_residual<Rational>(g, flux))
    if (r != 0) throw ValidationError("flux is not in the kernel of the incidence matrix");
  std::vector<Rational> kappa;
  for (std::size_t j = 0; j < g.num_edges(); ++j) kappa.push_back(flux[j] / monomial<Rational>(x, net.source(j)));
  return kappa;
}

std::vector<Rational> cycle_flux(const ReactionGraph& g, std::span<const Rational> weights) {
  require_weakly_reversible(g);
  if (weights.size() != g.num_edges()) throw DimensionError("weight vector length does not match edge count");
  require_positive(weights, "cycle weights");
  const std::size_t m = g.num_nodes();
  std::vector<std::vector<std::size_t>> out_edges(m);
  for (std::size_t j = 0; j < g.num_edges(); ++j) out_edges[g.edges()[j].source].push_back(j);
  std::vector<Rational> flux(g.num_edges(), Rational(0));
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const auto& e = g.edges()[j];
    // Breadth-first search from the edge's target back to its source.
    std::vector<std::size_t> via(m, none);
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> queue{e.target};
    seen[e.target] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[e.source]; ++head)
      for (std::size_t k : out_edges[queue[head]]) {
        const std::size_t w = g.edges()[k].target;
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = k;
        queue.push_back(w);
      }
    flux[j] += weights[j];
    for (std::size_t v = e.source; v != e.target; v = g.edges()[via[v]].source) flux[via[v]] += weights[j];
  }
  return flux;
}

}  // namespace crn
