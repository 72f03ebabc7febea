#include <benchmark/benchmark.h>

#include <random>

#include "orthorep/garden.hpp"
#include "orthorep/graph_catalog.hpp"
#include "orthorep/lss.hpp"
#include "orthorep/sat_reduction.hpp"
#include "orthorep/unique_monomial.hpp"

using namespace orthorep;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

RationalMatrix random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform_signed(rng, 1000);
  return m;
}

}  // namespace

static void BM_Greedegree(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(greedegree(g).value);
}
BENCHMARK(BM_Greedegree)->DenseRange(8, 20, 4);

static void BM_GreedegreePetersen(benchmark::State& state) {
  const Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(greedegree(g).value);
}
BENCHMARK(BM_GreedegreePetersen);

static void BM_UniformLss(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 0.5, 11);
  const auto w = greedegree(g);
  const int d = n - w.value;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(uniform_lss(g, w.witness, d, ++seed).T);
}
BENCHMARK(BM_UniformLss)->DenseRange(6, 18, 4);

static void BM_Rank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(4, 32);

static void BM_LeadingTermSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = cycle_graph(n);
  const auto garden = build_lss_garden_II(g, Ordering::identity(n), n - 1, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(leading_term_search(garden, 3).signed_count);
}
BENCHMARK(BM_LeadingTermSearch)->DenseRange(5, 7)->Unit(benchmark::kMicrosecond);

static void BM_PairAvoidFormulaGraph(benchmark::State& state) {
  const auto phi = parse_dimacs("p cnf 3 5\n1 2 3 0\n-1 2 0\n1 -3 0\n-2 3 0\n-1 -2 -3 0\n");
  const auto bundle = build_formula_graph(phi, ReductionMode::factor(1));
  for (auto _ : state) benchmark::DoNotOptimize(pair_avoid(bundle.g, bundle.a, bundle.b).avoidable);
}
BENCHMARK(BM_PairAvoidFormulaGraph)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
