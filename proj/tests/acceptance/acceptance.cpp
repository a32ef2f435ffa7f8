// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "snap/bench/bench.hpp"
#include "snap/ci/testers.hpp"
#include "snap/discovery/discovery.hpp"
#include "snap/graph/edge_list.hpp"
#include "snap/synthetic/synthetic.hpp"

using namespace snap;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

VertexSet from_mask(const oracle::Mask& m) {
  const auto v = oracle::members(m);
  return VertexSet(m.size(), std::span<const Vertex>(v));
}

// ---------------------------------------------------------------------------
// Small random suite shared by the first four criteria and the RFCI budget.

struct SuiteCase {
  Dag dag;
  VertexSet targets;
  MixedGraph cpdag;
  VertexSet possan;  // by MEC enumeration
};

std::vector<SuiteCase> make_suite() {
  std::vector<SuiteCase> out;
  std::mt19937_64 rng(20240601);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 8)(rng);
    const double degree = std::min<double>(std::uniform_int_distribution<int>(2, 3)(rng), static_cast<double>(n - 1));
    const std::size_t t = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    SuiteCase c;
    c.dag = synthetic::random_dag({n, degree, 10, rng()});
    c.targets = synthetic::sample_targets(c.dag, t, synthetic::TargetMode::Random, rng());
    c.cpdag = cpdag_of(c.dag);
    c.possan = from_mask(oracle::possible_ancestors_by_enumeration(c.dag, oracle::to_mask(n, c.targets.to_vector())));
    out.push_back(std::move(c));
  }
  return out;
}

struct BudgetTracker {
  std::size_t calls = 0;
  std::size_t violations = 0;
  void check(const discovery::DiscoveryResult& r) {
    for (const auto& s : r.rfci_calls) {
      ++calls;
      if (s.tests > s.budget()) ++violations;
    }
  }
  void check(const discovery::RfciStats& s) {
    ++calls;
    if (s.tests > s.budget()) ++violations;
  }
};

Outcome oracle_soundness(const std::vector<SuiteCase>& suite, BudgetTracker& budget) {
  const auto start = Clock::now();
  std::size_t runs = 0, violations = 0;
  for (const auto& c : suite) {
    const std::size_t n = c.dag.n_vertices();
    std::vector<std::size_t> ks{0, 1, 2, n - 2};
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (std::size_t k : ks) {
      ci::OracleTester t(c.dag);
      const auto r = discovery::snap_k(VertexSet::full(n), c.targets, k, t);
      budget.check(r);
      ++runs;
      const bool contains = c.possan.is_subset_of(r.remaining);
      const bool ancestral = possible_ancestors(c.cpdag, r.remaining) == r.remaining;
      if (!contains || !ancestral) ++violations;
    }
  }
  const double secs = seconds_since(start);
  return {violations == 0 && secs < 120.0,
          fmt::format("{} runs, {} violations, {:.1f}s", runs, violations, secs)};
}

Outcome oracle_completeness(const std::vector<SuiteCase>& suite, BudgetTracker& budget) {
  std::size_t mismatches = 0;
  for (const auto& c : suite) {
    ci::OracleTester t(c.dag);
    const auto r = discovery::snap_inf(VertexSet::full(c.dag.n_vertices()), c.targets, t);
    budget.check(r);
    if (r.remaining != c.possan || r.graph != induced_subgraph(c.cpdag, c.possan).graph) ++mismatches;
  }
  return {mismatches == 0, fmt::format("{} graphs, {} mismatches", suite.size(), mismatches)};
}

Outcome prefilter_equivalence(const std::vector<SuiteCase>& suite, BudgetTracker& budget) {
  std::size_t mismatches = 0;
  for (const auto& c : suite) {
    ci::OracleTester t(c.dag);
    const auto r = discovery::snap_prefilter_then(discovery::GlobalAlgorithm::Pc, VertexSet::full(c.dag.n_vertices()),
                                                  c.targets, 0, t);
    budget.check(r);
    if (r.graph != induced_subgraph(c.cpdag, r.remaining).graph) ++mismatches;
  }
  return {mismatches == 0, fmt::format("{} graphs, {} mismatches", suite.size(), mismatches)};
}

Outcome pc_baseline(const std::vector<SuiteCase>& suite) {
  std::size_t nonzero = 0;
  for (const auto& c : suite) {
    ci::OracleTester t(c.dag);
    if (shd(discovery::pc(VertexSet::full(c.dag.n_vertices()), t).lifted(), c.cpdag) != 0) ++nonzero;
  }
  return {nonzero == 0, fmt::format("{} graphs, {} with SHD > 0", suite.size(), nonzero)};
}

// ---------------------------------------------------------------------------

Outcome counter_example(BudgetTracker& budget) {
  const Dag dag = to_dag(load_edge_list(std::string(SNAP_TEST_DATA_DIR) + "/more_tests.edges"));
  VertexSet targets(dag.n_vertices());
  for (Vertex v = 0; v < dag.n_vertices(); ++v)
    if (dag.label(v) == "X1" || dag.label(v) == "X2") targets.insert(v);
  ci::OracleTester ts(dag), tp(dag);
  const auto s = discovery::snap_inf(VertexSet::full(dag.n_vertices()), targets, ts);
  const auto p = discovery::pc(VertexSet::full(dag.n_vertices()), tp);
  budget.check(s);
  return {s.tests.total == p.tests.total + 1,
          fmt::format("SNAP(inf) {} tests, PC {} tests", s.tests.total, p.tests.total)};
}

Outcome golden_graphs(BudgetTracker& budget) {
  using namespace fixtures;
  ci::OracleTester t(two_colliders());
  auto st = discovery::DiscoveryState::start(VertexSet::full(6));
  discovery::skeleton_step(st, t, 0);
  const bool a = discovery::orient_vstructures_pc(st.skeleton, st.sepsets) == two_colliders_order0_expected();

  MixedGraph skeleton;
  SepsetMap sepsets;
  masked_collider_replay(skeleton, sepsets);
  const bool pc_ok = discovery::orient_vstructures_pc(skeleton, sepsets) == masked_collider_pc_expected();
  ci::OracleTester te(masked_collider());
  const auto r = discovery::orient_vstructures_rfci(skeleton, sepsets, te);
  budget.check(r.stats);
  const bool rfci_ok = r.oriented == masked_collider_rfci_expected();
  return {a && pc_ok && rfci_ok, fmt::format("order-0 A<->B: {}; replay PC A<->B: {}; replay RFCI A->B: {}",
                                             a ? "yes" : "no", pc_ok ? "yes" : "no", rfci_ok ? "yes" : "no")};
}

Outcome expected_ancestors() {
  const double table[] = {40.8, 80.8, 120.8, 160.8, 200.8, 240.8};
  bool ok = true;
  std::string values;
  for (int i = 0; i < 6; ++i) {
    const double m = synthetic::expected_possible_ancestors(50 * (i + 1), 4);
    ok = ok && std::abs(m - table[i]) <= 0.05;
    values += fmt::format("{}{:.2f}", i ? "," : "", m);
  }
  std::vector<double> sizes;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Dag dag = synthetic::random_dag({50, 3.0, 10, synthetic::stream_seed(seed, 0, synthetic::Purpose::Graph)});
    const auto targets = synthetic::sample_targets(dag, 4, synthetic::TargetMode::Random,
                                                   synthetic::stream_seed(seed, 0, synthetic::Purpose::Targets));
    sizes.push_back(static_cast<double>(possible_ancestors(cpdag_of(dag), targets).size()));
  }
  double mean = 0, sq = 0;
  for (double s : sizes) mean += s;
  mean /= static_cast<double>(sizes.size());
  for (double s : sizes) sq += (s - mean) * (s - mean);
  const double sd = std::sqrt(sq / static_cast<double>(sizes.size() - 1));
  ok = ok && mean >= 12.0 && mean <= 28.0;
  return {ok, fmt::format("M = {}; empirical |PossAn| at 50 vertices = {:.2f} +- {:.2f}", values, mean, sd)};
}

bench::ExperimentConfig oracle_sweep(std::size_t n, double degree, std::vector<bench::AlgorithmSpec> algs) {
  bench::ExperimentConfig cfg;
  cfg.n_vertices = {n};
  cfg.expected_degree = {degree};
  cfg.n_targets = {4};
  cfg.max_degree = 10;
  cfg.algorithms = std::move(algs);
  cfg.replicates = 100;
  cfg.seed = 1;
  cfg.workers = 0;
  return cfg;
}

Outcome test_reduction() {
  const auto start = Clock::now();
  const auto rows = bench::run_experiment(
      oracle_sweep(100, 3.0, {{bench::Algorithm::Pc, 0}, {bench::Algorithm::SnapInf, 0}}));
  double pc = 0, snap = 0;
  std::size_t not_worse = 0, errors = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    if (!rows[i].ok() || !rows[i + 1].ok()) {
      ++errors;
      continue;
    }
    pc += static_cast<double>(rows[i].tests.total);
    snap += static_cast<double>(rows[i + 1].tests.total);
    if (rows[i + 1].tests.total <= rows[i].tests.total) ++not_worse;
  }
  const std::size_t reps = rows.size() / 2;
  const double secs = seconds_since(start);
  const bool ok = errors == 0 && snap < 0.5 * pc && not_worse * 10 >= reps * 9 && secs < 600.0;
  return {ok, fmt::format("mean tests SNAP(inf) {:.1f} vs PC {:.1f} ({:.1f}%), SNAP <= PC in {}/{}, {} errors, {:.1f}s",
                          snap / double(reps), pc / double(reps), 100.0 * snap / pc, not_worse, reps, errors, secs)};
}

Outcome prefilter_order() {
  const auto rows = bench::run_experiment(
      oracle_sweep(50, 5.0, {{bench::Algorithm::SnapKThenPc, 0}, {bench::Algorithm::SnapKThenPc, 1}}));
  double k0 = 0, k1 = 0;
  std::size_t errors = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    if (!rows[i].ok() || !rows[i + 1].ok()) {
      ++errors;
      continue;
    }
    k0 += static_cast<double>(rows[i].tests.total);
    k1 += static_cast<double>(rows[i + 1].tests.total);
  }
  const double reps = static_cast<double>(rows.size() / 2);
  return {errors == 0 && k1 < k0,
          fmt::format("mean tests SNAP(1)+PC {:.1f} vs SNAP(0)+PC {:.1f}, {} errors", k1 / reps, k0 / reps, errors)};
}

Outcome estimation_accuracy() {
  bench::ExperimentConfig cfg;
  cfg.n_vertices = {30};
  cfg.expected_degree = {3.0};
  cfg.n_targets = {4};
  cfg.n_samples = {20000};  // half is held out for estimation
  cfg.algorithms = {{bench::Algorithm::SnapInf, 0}};
  cfg.target_mode = synthetic::TargetMode::Identifiable;
  cfg.estimate_effects = true;
  cfg.replicates = 50;
  cfg.seed = 2;
  const auto rows = bench::run_experiment(cfg);
  double total = 0;
  std::size_t used = 0, errors = 0;
  for (const auto& r : rows) {
    if (!r.ok() || !r.intervention_distance) {
      ++errors;
      continue;
    }
    total += *r.intervention_distance;
    ++used;
  }
  const double mean = used ? total / double(used) : NAN;
  return {errors == 0 && mean < 0.05,
          fmt::format("mean intervention distance {:.4f} over {} seeds, {} errors", mean, used, errors)};
}

Outcome finite_sample() {
  bench::ExperimentConfig cfg;
  cfg.n_vertices = {50};
  cfg.expected_degree = {3.0};
  cfg.n_targets = {4};
  cfg.n_samples = {1000};
  cfg.tester = bench::TesterKind::FisherZ;
  cfg.alpha = 0.05;
  cfg.algorithms = {{bench::Algorithm::Pc, 0}, {bench::Algorithm::SnapInf, 0}};
  cfg.estimate_effects = true;
  cfg.replicates = 50;
  cfg.seed = 3;
  const auto rows = bench::run_experiment(cfg);
  double pc = 0, snap = 0;
  std::size_t used = 0, errors = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    if (!rows[i].ok() || !rows[i + 1].ok()) {
      ++errors;
      continue;
    }
    pc += *rows[i].intervention_distance;
    snap += *rows[i + 1].intervention_distance;
    ++used;
  }
  pc /= double(used);
  snap /= double(used);
  return {errors == 0 && snap <= 1.5 * pc,
          fmt::format("mean intervention distance SNAP(inf) {:.4f} vs PC {:.4f} (ratio {:.2f}), {} errors", snap, pc,
                      snap / pc, errors)};
}

Outcome calibration() {
  const std::size_t n = 10000;
  int fz = 0, chi = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    std::mt19937_64 rng(synthetic::stream_seed(77, rep, synthetic::Purpose::Data));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::vector<double>> g(2, std::vector<double>(n)), b(2, std::vector<double>(n));
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        g[j][r] = normal(rng);
        b[j][r] = coin(rng) ? 1.0 : 0.0;
      }
    const std::vector<std::string> names{"a", "b"};
    fz += ci::fisher_z_test(ci::Dataset::continuous(names, g), 0, 1, {}) ? 0 : 1;
    chi += ci::chi_square_test(ci::Dataset::categorical(names, b), 0, 1, {}) ? 0 : 1;
  }
  const double rf = fz / 1000.0, rc = chi / 1000.0;
  const bool ok = std::abs(rf - 0.05) <= 0.02 && std::abs(rc - 0.05) <= 0.02;
  return {ok, fmt::format("type-I rate Fisher-Z {:.3f}, chi-square {:.3f}", rf, rc)};
}

// Adds its own pass over the suite, the counter-example and the masked
// collider replay to whatever the earlier criteria already recorded.
Outcome rfci_budget(const std::vector<SuiteCase>& suite, BudgetTracker& budget) {
  for (const auto& c : suite) {
    const std::size_t n = c.dag.n_vertices();
    for (std::size_t k : {std::size_t{2}, n - 2}) {
      ci::OracleTester t(c.dag);
      budget.check(discovery::snap_k(VertexSet::full(n), c.targets, k, t));
    }
    ci::OracleTester t(c.dag);
    budget.check(discovery::snap_inf(VertexSet::full(n), c.targets, t));
  }
  counter_example(budget);
  golden_graphs(budget);
  return {budget.violations == 0 && budget.calls > 0,
          fmt::format("{} RFCI orientation calls, {} over budget", budget.calls, budget.violations)};
}

Outcome determinism() {
  bench::ExperimentConfig cfg;
  cfg.n_vertices = {15, 25};
  cfg.expected_degree = {2.0, 3.0};
  cfg.n_targets = {3};
  cfg.n_samples = {800};
  cfg.tester = bench::TesterKind::FisherZ;
  cfg.algorithms = {{bench::Algorithm::Pc, 0}, {bench::Algorithm::SnapInf, 0}, {bench::Algorithm::SnapKThenPc, 1}};
  cfg.estimate_effects = true;
  cfg.replicates = 3;
  cfg.seed = 11;
  auto csv = [](std::vector<bench::MetricsRow> rows) {
    for (auto& r : rows) r.wall_ms = 0;
    std::ostringstream out;
    bench::write_rows_csv(out, rows);
    return out.str();
  };
  cfg.workers = 1;
  const auto a = csv(bench::run_experiment(cfg));
  cfg.workers = 4;
  const auto b = csv(bench::run_experiment(cfg));
  const auto c = csv(bench::run_experiment(cfg));
  return {a == b && b == c, fmt::format("3 runs, {} bytes each, identical: {}", a.size(), a == b && b == c ? "yes" : "no")};
}

}  // namespace

// Optional arguments select criteria by number; the default runs all of them.
int main(int argc, char** argv) {
  std::vector<bool> selected(15, argc == 1);
  for (int a = 1; a < argc; ++a) {
    const int c = std::atoi(argv[a]);
    if (c >= 1 && c <= 14) selected[c] = true;
  }
  const auto suite = make_suite();
  BudgetTracker budget;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle soundness of SNAP(k)", [&] { return oracle_soundness(suite, budget); }},
      {"oracle completeness of SNAP(inf)", [&] { return oracle_completeness(suite, budget); }},
      {"prefilter equivalence SNAP(0)+PC", [&] { return prefilter_equivalence(suite, budget); }},
      {"PC baseline equals CPDAG", [&] { return pc_baseline(suite); }},
      {"counter-example needs one more test", [&] { return counter_example(budget); }},
      {"golden bidirected / RFCI graphs", [&] { return golden_graphs(budget); }},
      {"expected possible ancestors", [&] { return expected_ancestors(); }},
      {"CI-test reduction trend", [&] { return test_reduction(); }},
      {"prefilter order trend", [&] { return prefilter_order(); }},
      {"effect estimation accuracy", [&] { return estimation_accuracy(); }},
      {"finite-sample intervention distance", [&] { return finite_sample(); }},
      {"CI test calibration", [&] { return calibration(); }},
      {"RFCI extra-test budget", [&] { return rfci_budget(suite, budget); }},
      {"bench determinism", [&] { return determinism(); }},
  };
  int failed = 0;
  std::size_t ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i + 1]) continue;
    ++ran;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, ran);
  return failed == 0 ? 0 : 1;
}
