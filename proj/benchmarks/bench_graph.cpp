#include <benchmark/benchmark.h>

#include <random>

#include "snap/graph/dag.hpp"
#include "snap/graph/mixed_graph.hpp"
#include "snap/synthetic/synthetic.hpp"

using namespace snap;

static void BM_DSeparation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Dag dag = synthetic::random_dag({n, 3.0, 10, 1});
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (auto _ : state) {
    const Vertex x = pick(rng), y = pick(rng);
    const Vertex s[] = {pick(rng), pick(rng)};
    if (x == y || s[0] == x || s[0] == y || s[1] == x || s[1] == y || s[0] == s[1]) continue;
    benchmark::DoNotOptimize(d_separated(dag, x, y, s));
  }
}
BENCHMARK(BM_DSeparation)->Arg(50)->Arg(200)->Arg(1000);

static void BM_CpdagOf(benchmark::State& state) {
  const Dag dag = synthetic::random_dag({static_cast<std::size_t>(state.range(0)), 3.0, 10, 3});
  for (auto _ : state) benchmark::DoNotOptimize(cpdag_of(dag));
}
BENCHMARK(BM_CpdagOf)->Arg(50)->Arg(200);
