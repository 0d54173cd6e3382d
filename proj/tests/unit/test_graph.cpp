#include <doctest.h>

#include "crn/errors.hpp"
#include "crn/reaction_graph.hpp"
#include "support.hpp"

using namespace crn;
namespace t = crn::testing;

TEST_CASE("tabulated deficiencies and weak reversibility") {
  const long deficiency[] = {2, 3, 3, 3, 5, 4, 5};
  const bool wr[] = {true, true, true, true, false, false, false};
  for (int k = 1; k <= 7; ++k) {
    CAPTURE(k);
    auto g = t::table1_graph(k);
    CHECK(g.deficiency() == deficiency[k - 1]);
    CHECK(g.is_weakly_reversible() == wr[k - 1]);
    CHECK(t::weakly_reversible_by_reachability(g) == wr[k - 1]);
  }
}

TEST_CASE("incidence columns are -1 at the source node and +1 at the target node") {
  auto g = t::table1_graph(4);
  const auto& c = g.incidence_matrix();
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    Integer sum = 0;
    for (std::size_t k = 0; k < g.num_nodes(); ++k) sum += c(k, j);
    CHECK(sum == 0);
    CHECK(c(g.edges()[j].source, j) == -1);
    CHECK(c(g.edges()[j].target, j) == 1);
  }
}

TEST_CASE("canonical graphs") {
  auto net = t::running_example();
  auto complex_graph = canonical_complex_graph(net);
  CHECK(complex_graph.num_nodes() == 4);
  CHECK(complex_graph.num_components() == 1);
  CHECK(complex_graph.deficiency() == 2);
  auto split = canonical_split_graph(net);
  CHECK(split.num_nodes() == 12);
  CHECK(split.num_components() == 6);
  CHECK_FALSE(split.is_weakly_reversible());
  CHECK(detailed_graph(net).deficiency() == 4);
}

TEST_CASE("components are numbered by their smallest node") {
  auto g = t::table1_graph(3);
  CHECK(g.num_components() == 2);
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    const auto& nodes = g.components()[c];
    CHECK(std::is_sorted(nodes.begin(), nodes.end()));
    if (c > 0) CHECK(g.components()[c - 1].front() < nodes.front());
    for (std::size_t j : g.component_edges(c)) CHECK(g.component_of(g.edges()[j].source) == c);
  }
}

TEST_CASE("inclusion morphism from the five-node onto the seven-node graph") {
  auto g4 = t::table1_graph(4);
  auto g5 = t::table1_graph(5);
  CHECK(precedes(g4, g5));
  CHECK_FALSE(precedes(g5, g4));
  auto m = inclusion_morphism(g4, g5);
  CHECK(m.phi == std::vector<std::size_t>{0, 1, 2, 3, 0, 4, 4});
  CHECK(m.is_valid());
  // C_small = B C_big
  CHECK(m.matrix() * g5.incidence_matrix() == g4.incidence_matrix());
  CHECK_THROWS(inclusion_morphism(g5, g4));
}

TEST_CASE("joining nodes within one component lowers the deficiency") {
  auto g2 = t::table1_graph(2);
  auto r = join_nodes(g2, 0, 4);
  CHECK(r.kind == StepKind::SameComponent);
  CHECK(r.graph.num_nodes() == g2.num_nodes() - 1);
  CHECK(r.graph.deficiency() == g2.deficiency() - 1);
  CHECK(precedes(r.graph, g2));
}

TEST_CASE("joining nodes of different components keeps the deficiency") {
  auto g3 = t::table1_graph(3);
  auto r = join_nodes(g3, 2, 5);
  CHECK(r.kind == StepKind::DifferentComponents);
  CHECK(r.graph.num_components() == g3.num_components() - 1);
  CHECK(r.graph.deficiency() == 3);
}

TEST_CASE("joining nodes with different labels is an error") {
  auto g4 = t::table1_graph(4);
  CHECK_THROWS(join_nodes(g4, 0, 1));
}

TEST_CASE("deficiency is nonnegative and WR agrees with reachability on random graphs") {
  t::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto net = t::random_network(rng);
    ReactionGraph g(t::random_partition(rng, net));
    CHECK(g.deficiency() >= 0);
    CHECK(g.is_weakly_reversible() == t::weakly_reversible_by_reachability(g));
    CHECK(g.num_components() <= g.num_nodes() / 2);
  }
}
