#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <thread>
#include <tuple>

#include "snap/adjustment/adjustment.hpp"
#include "snap/bench/bench.hpp"
#include "snap/ci/testers.hpp"
#include "snap/discovery/discovery.hpp"
#include "snap/error.hpp"
#include "snap/graph/edge_list.hpp"
#include "snap/graph/mixed_graph.hpp"

namespace snap::bench {

namespace {

using synthetic::Purpose;
using synthetic::stream_seed;

struct GridPoint {
  std::size_t n_vertices;
  double expected_degree;
  std::size_t n_targets;
  std::size_t n_samples;
};

struct Job {
  GridPoint point;
  std::size_t replicate;
};

/// Ground truth and data shared by every algorithm of one replicate.
struct Instance {
  Dag dag;
  MixedGraph cpdag;
  VertexSet targets;
  VertexSet true_possan;
  std::optional<ci::Dataset> discovery_data;
  std::optional<ci::Dataset> estimation_data;
  adjustment::PairMap true_effects;
};

Instance build_instance(const ExperimentConfig& cfg, const std::optional<Dag>& fixed, const Job& job) {
  Instance in;
  const std::uint64_t rep = job.replicate;
  if (fixed) {
    in.dag = *fixed;
  } else {
    in.dag = synthetic::random_dag({job.point.n_vertices, job.point.expected_degree, cfg.max_degree,
                                    stream_seed(cfg.seed, rep, Purpose::Graph)});
  }
  const std::size_t n = in.dag.n_vertices();
  in.cpdag = cpdag_of(in.dag);

  if (!cfg.fixed_targets.empty()) {
    in.targets = VertexSet(n);
    for (const auto& name : cfg.fixed_targets) {
      const auto& labels = in.dag.labels();
      const auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end()) throw Error(Errc::InvalidConfig, "target '" + name + "' is not in the graph");
      in.targets.insert(static_cast<Vertex>(it - labels.begin()));
    }
  } else {
    in.targets = synthetic::sample_targets(in.dag, job.point.n_targets, cfg.target_mode,
                                           stream_seed(cfg.seed, rep, Purpose::Targets));
  }
  in.true_possan = possible_ancestors(in.cpdag, in.targets);

  const bool need_data = cfg.tester != TesterKind::Oracle || cfg.estimate_effects;
  if (!need_data) return in;

  const auto param_seed = stream_seed(cfg.seed, rep, Purpose::Parameters);
  const auto data_seed = stream_seed(cfg.seed, rep, Purpose::Data);
  std::optional<synthetic::SemSpec> sem;
  std::optional<synthetic::CptSpec> cpt;
  ci::Dataset data;
  if (cfg.data_model == DataModel::LinearGaussian) {
    sem = synthetic::random_sem(in.dag, param_seed);
    data = synthetic::sample_linear_gaussian(*sem, job.point.n_samples, data_seed);
  } else {
    cpt = synthetic::random_cpt(in.dag, param_seed);
    data = synthetic::sample_binary(*cpt, job.point.n_samples, data_seed);
  }

  if (!cfg.estimate_effects) {
    in.discovery_data = std::move(data);
    return in;
  }
  auto [first, second] = data.split(0.5, stream_seed(cfg.seed, rep, Purpose::Split));
  in.discovery_data = std::move(first);
  in.estimation_data = std::move(second);

  const auto truth_seed = stream_seed(cfg.seed, rep, Purpose::Truth);
  for (Vertex a : in.targets) {
    for (Vertex b : in.targets) {
      if (a == b) continue;
      in.true_effects[{a, b}] =
          sem ? adjustment::true_total_effect(in.dag, sem->weights, a, b)
              : synthetic::binary_interventional_effect(*cpt, a, b, cfg.truth_samples, stream_seed(truth_seed, a * n + b, Purpose::Truth));
    }
  }
  return in;
}

std::unique_ptr<ci::CITester> make_tester(const ExperimentConfig& cfg, const Instance& in) {
  switch (cfg.tester) {
    case TesterKind::Oracle:
      return std::make_unique<ci::OracleTester>(in.dag);
    case TesterKind::FisherZ:
      return std::make_unique<ci::FisherZTester>(*in.discovery_data, cfg.alpha);
    case TesterKind::ChiSquare:
      return std::make_unique<ci::ChiSquareTester>(*in.discovery_data, cfg.alpha);
  }
  throw Error(Errc::InvalidConfig, "unknown tester");
}

discovery::DiscoveryResult discover(const AlgorithmSpec& alg, const VertexSet& targets, ci::CITester& tester) {
  const VertexSet all = VertexSet::full(tester.n_vertices());
  switch (alg.kind) {
    case Algorithm::Pc:
      return discovery::pc(all, tester);
    case Algorithm::SnapInf:
      return discovery::snap_inf(all, targets, tester);
    case Algorithm::SnapK:
      return discovery::snap_k(all, targets, alg.k, tester);
    case Algorithm::SnapKThenPc:
      return discovery::snap_prefilter_then(discovery::GlobalAlgorithm::Pc, all, targets, alg.k, tester);
  }
  throw Error(Errc::InvalidConfig, "unknown algorithm");
}

void run_algorithm(const ExperimentConfig& cfg, const Instance& in, const AlgorithmSpec& alg, MetricsRow& row) {
  auto tester = make_tester(cfg, in);
  const auto result = discover(alg, in.targets, *tester);
  row.tests = result.tests;
  row.wall_ms = std::chrono::duration<double, std::milli>(result.wall_time).count();
  row.n_remaining = result.remaining.size();

  const MixedGraph estimated = result.lifted();
  row.shd_on_possan = shd(induced_subgraph(estimated, in.true_possan).graph,
                          induced_subgraph(in.cpdag, in.true_possan).graph);

  if (cfg.estimate_effects) {
    adjustment::EstimateMap estimates;
    for (Vertex a : in.targets)
      for (Vertex b : in.targets)
        if (a != b) estimates[{a, b}] = adjustment::estimate_effect(*in.estimation_data, estimated, a, b);
    row.intervention_distance = adjustment::intervention_distance(in.true_effects, estimates, in.targets);
  }
}

void run_job(const ExperimentConfig& cfg, const std::optional<Dag>& fixed, const Job& job,
             std::vector<MetricsRow>& out) {
  out.clear();
  for (const auto& alg : cfg.algorithms) {
    MetricsRow row;
    row.n_vertices = job.point.n_vertices;
    row.expected_degree = job.point.expected_degree;
    row.n_targets = job.point.n_targets;
    row.n_samples = job.point.n_samples;
    row.replicate = job.replicate;
    row.seed = cfg.seed;
    row.algorithm = alg.name();
    row.tester = to_string(cfg.tester);
    row.alpha = cfg.alpha;
    out.push_back(std::move(row));
  }

  auto record_error = [&](MetricsRow& row, const std::string& what) {
    MetricsRow blank = row;
    blank.tests = {};
    blank.wall_ms = 0.0;
    blank.shd_on_possan = 0;
    blank.intervention_distance.reset();
    blank.n_remaining = 0;
    blank.n_true_possan = 0;
    blank.error = what.empty() ? "unknown error" : what;
    row = std::move(blank);
  };

  Instance in;
  try {
    in = build_instance(cfg, fixed, job);
  } catch (const std::exception& e) {
    for (auto& row : out) record_error(row, e.what());
    return;
  }
  for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
    auto& row = out[i];
    row.n_true_possan = in.true_possan.size();
    try {
      run_algorithm(cfg, in, cfg.algorithms[i], row);
    } catch (const std::exception& e) {
      record_error(row, e.what());
    }
  }
}

}  // namespace

std::vector<MetricsRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::optional<Dag> fixed;
  std::vector<GridPoint> grid;
  if (cfg.graph_file) {
    fixed = to_dag(load_edge_list(*cfg.graph_file));
    const std::size_t n = fixed->n_vertices();
    const double degree = n ? 2.0 * static_cast<double>(fixed->n_edges()) / static_cast<double>(n) : 0.0;
    std::vector<std::size_t> target_axis = cfg.n_targets;
    if (!cfg.fixed_targets.empty()) target_axis = {cfg.fixed_targets.size()};
    for (std::size_t t : target_axis)
      for (std::size_t s : cfg.n_samples) grid.push_back({n, degree, t, s});
  } else {
    for (std::size_t n : cfg.n_vertices)
      for (double d : cfg.expected_degree)
        for (std::size_t t : cfg.n_targets)
          for (std::size_t s : cfg.n_samples) grid.push_back({n, d, t, s});
  }

  std::vector<Job> jobs;
  for (const auto& p : grid)
    for (std::size_t r = 0; r < cfg.replicates; ++r) jobs.push_back({p, r});

  std::vector<std::vector<MetricsRow>> results(jobs.size());
  std::size_t workers = cfg.workers ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(jobs.size(), 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) run_job(cfg, fixed, jobs[j], results[j]);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<MetricsRow> rows;
  for (auto& r : results)
    for (auto& row : r) rows.push_back(std::move(row));
  return rows;
}

double trimmed_mean(std::vector<double> values, double trim) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  const auto drop = static_cast<std::size_t>(std::floor(trim * static_cast<double>(values.size())));
  if (2 * drop >= values.size()) return std::nan("");
  double sum = 0.0;
  for (std::size_t i = drop; i < values.size() - drop; ++i) sum += values[i];
  return sum / static_cast<double>(values.size() - 2 * drop);
}

std::vector<SummaryRow> summarize(const std::vector<MetricsRow>& rows, double trim) {
  using Key = std::tuple<std::size_t, double, std::size_t, std::size_t, std::string>;
  std::vector<Key> order;
  std::map<Key, std::vector<const MetricsRow*>> groups;
  for (const auto& r : rows) {
    Key key{r.n_vertices, r.expected_degree, r.n_targets, r.n_samples, r.algorithm};
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back(&r);
  }

  std::vector<SummaryRow> out;
  for (const auto& key : order) {
    const auto& members = groups.at(key);
    SummaryRow s;
    std::tie(s.n_vertices, s.expected_degree, s.n_targets, s.n_samples, s.algorithm) = key;
    s.n_rows = members.size();
    std::vector<double> tests, wall, shd_v, id, remaining, truth;
    for (const auto* r : members) {
      if (!r->ok()) {
        ++s.n_errors;
        continue;
      }
      tests.push_back(static_cast<double>(r->tests.total));
      wall.push_back(r->wall_ms);
      shd_v.push_back(static_cast<double>(r->shd_on_possan));
      if (r->intervention_distance) id.push_back(*r->intervention_distance);
      remaining.push_back(static_cast<double>(r->n_remaining));
      truth.push_back(static_cast<double>(r->n_true_possan));
    }
    s.ci_tests_total = trimmed_mean(tests, trim);
    s.wall_ms = trimmed_mean(wall, trim);
    s.shd_on_possan = trimmed_mean(shd_v, trim);
    if (!id.empty()) s.intervention_distance = trimmed_mean(id, trim);
    s.n_remaining = trimmed_mean(remaining, trim);
    s.n_true_possan = trimmed_mean(truth, trim);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace snap::bench
