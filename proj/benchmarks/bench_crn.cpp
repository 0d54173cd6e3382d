#include <benchmark/benchmark.h>

#include <random>

#include "crn/balance.hpp"
#include "crn/dynamics.hpp"
#include "crn/partition.hpp"

namespace {

using namespace crn;

const char* const kRunning = R"(species: X1 X2
3 X1 -> X1 + 2 X2
X1 + 2 X2 -> 3 X2
3 X2 -> 2 X1 + X2
2 X1 + X2 -> 3 X1
3 X1 <=> 3 X2
)";

NetworkPtr running() {
  static const NetworkPtr net = std::make_shared<const ReactionNetwork>(parse_network(kRunning));
  return net;
}

// Complete digraph on n complexes A1..An: every component is one strongly
// connected block, so every node has many spanning trees.
NetworkPtr complete_network(int n) {
  std::string text;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) text += "A" + std::to_string(i) + " -> A" + std::to_string(j) + "\n";
  return std::make_shared<const ReactionNetwork>(parse_network(text));
}

std::vector<Rational> rates(std::size_t p, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(1, 9);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < p; ++j) out.emplace_back(d(rng), d(rng));
  return out;
}

void BM_TreeConstantsSymbolic(benchmark::State& state) {
  auto g = canonical_complex_graph(complete_network(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(tree_constants_symbolic(g));
}
BENCHMARK(BM_TreeConstantsSymbolic)->DenseRange(3, 6);

void BM_TreeConstantsMinors(benchmark::State& state) {
  auto g = canonical_complex_graph(complete_network(static_cast<int>(state.range(0))));
  auto kappa = rates(g.num_edges(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(tree_constants_eval(g, kappa));
}
BENCHMARK(BM_TreeConstantsMinors)->DenseRange(3, 9, 2);

void BM_EnumeratePartitions(benchmark::State& state) {
  auto net = running();
  for (auto _ : state) {
    std::size_t wr = 0;
    for_each_admissible_partition(net, kDefaultPartitionCap, [&](const AdmissiblePartition& p) {
      wr += ReactionGraph(p).is_weakly_reversible();
      return true;
    });
    benchmark::DoNotOptimize(wr);
  }
}
BENCHMARK(BM_EnumeratePartitions);

void BM_BalanceCheck(benchmark::State& state) {
  auto g = canonical_complex_graph(running());
  std::vector<Rational> kappa(6, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_kappa_balanced(g, kappa));
}
BENCHMARK(BM_BalanceCheck);

void BM_Simulate(benchmark::State& state) {
  auto net = running();
  std::vector<double> kappa{1, 1, 1, 1, 2, 2};
  std::vector<double> x0{0.4, 1.1};
  SimulationOptions opts;
  opts.adaptive = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(*net, kappa, x0, 5.0, opts));
}
BENCHMARK(BM_Simulate)->Arg(0)->Arg(1);

void BM_BirchPoint(benchmark::State& state) {
  auto net = running();
  auto g = ReactionGraph(AdmissiblePartition::from_one_based(net, {{1, 8}, {2, 3}, {4, 5, 10, 11}, {6, 7}, {9, 12}}));
  std::vector<Rational> kappa{1, 1, 1, 1, 2, 2};
  std::vector<double> x0{0.4, 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(birch_point(g, kappa, x0));
}
BENCHMARK(BM_BirchPoint);

}  // namespace

BENCHMARK_MAIN();
