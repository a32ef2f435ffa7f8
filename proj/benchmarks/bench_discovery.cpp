#include <benchmark/benchmark.h>

#include "snap/ci/testers.hpp"
#include "snap/discovery/discovery.hpp"
#include "snap/synthetic/synthetic.hpp"

using namespace snap;

namespace {

struct Problem {
  Dag dag;
  VertexSet targets;
};

Problem make_problem(std::size_t n) {
  Dag dag = synthetic::random_dag({n, 3.0, 10, 7});
  auto targets = synthetic::sample_targets(dag, 4, synthetic::TargetMode::Random, 8);
  return {std::move(dag), std::move(targets)};
}

}  // namespace

// Oracle tests, so this times the search itself rather than statistics.
static void BM_Pc(benchmark::State& state) {
  const auto p = make_problem(static_cast<std::size_t>(state.range(0)));
  std::uint64_t tests = 0;
  for (auto _ : state) {
    ci::OracleTester t(p.dag);
    tests = discovery::pc(VertexSet::full(p.dag.n_vertices()), t).tests.total;
  }
  state.counters["ci_tests"] = static_cast<double>(tests);
}
BENCHMARK(BM_Pc)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_SnapInf(benchmark::State& state) {
  const auto p = make_problem(static_cast<std::size_t>(state.range(0)));
  std::uint64_t tests = 0;
  for (auto _ : state) {
    ci::OracleTester t(p.dag);
    tests = discovery::snap_inf(VertexSet::full(p.dag.n_vertices()), p.targets, t).tests.total;
  }
  state.counters["ci_tests"] = static_cast<double>(tests);
}
BENCHMARK(BM_SnapInf)->Arg(30)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
