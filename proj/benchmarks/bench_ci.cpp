#include <benchmark/benchmark.h>

#include "snap/ci/testers.hpp"
#include "snap/synthetic/synthetic.hpp"

using namespace snap;

static void BM_FisherZ(benchmark::State& state) {
  const Dag dag = synthetic::random_dag({20, 3.0, 10, 1});
  const auto data = synthetic::sample_linear_gaussian(synthetic::random_sem(dag, 2), 5000, 3);
  ci::FisherZTester tester(data);
  std::vector<Vertex> s;
  for (Vertex v = 2; v < 2 + static_cast<Vertex>(state.range(0)); ++v) s.push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(tester.independent(0, 1, s));
}
BENCHMARK(BM_FisherZ)->Arg(0)->Arg(2)->Arg(8);

static void BM_ChiSquare(benchmark::State& state) {
  const Dag dag = synthetic::random_dag({10, 2.0, 10, 1});
  const auto data = synthetic::sample_binary(synthetic::random_cpt(dag, 2), 5000, 3);
  ci::ChiSquareTester tester(data);
  std::vector<Vertex> s;
  for (Vertex v = 2; v < 2 + static_cast<Vertex>(state.range(0)); ++v) s.push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(tester.independent(0, 1, s));
}
BENCHMARK(BM_ChiSquare)->Arg(0)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
