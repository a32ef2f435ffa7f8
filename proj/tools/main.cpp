// snap: command-line front end for generation, discovery, estimation and
// benchmarking. Exit codes: 0 ok, 1 usage error, 2 runtime failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "snap/adjustment/adjustment.hpp"
#include "snap/bench/bench.hpp"
#include "snap/ci/testers.hpp"
#include "snap/discovery/discovery.hpp"
#include "snap/discovery/result_io.hpp"
#include "snap/error.hpp"
#include "snap/graph/edge_list.hpp"
#include "snap/synthetic/synthetic.hpp"

namespace fs = std::filesystem;
using namespace snap;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Vertex lookup(const std::vector<std::string>& labels, const std::string& name) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return i;
  throw UsageError("unknown vertex '" + name + "'");
}

VertexSet lookup_all(const std::vector<std::string>& labels, const std::string& list) {
  VertexSet out(labels.size());
  for (const auto& name : split_names(list)) out.insert(lookup(labels, name));
  return out;
}

std::vector<std::string> labels_of(const MixedGraph& g) {
  std::vector<std::string> out;
  for (Vertex v = 0; v < g.n_vertices(); ++v) out.push_back(g.label(v));
  return out;
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
  std::string config;
  std::string out;
};

void run_generate(const GenerateArgs& a) {
  std::ifstream in(a.config);
  if (!in) throw UsageError("cannot open " + a.config);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON config: ") + e.what());
  }
  synthetic::GenConfig gen;
  gen.n_vertices = doc.value("n_vertices", gen.n_vertices);
  gen.expected_degree = doc.value("expected_degree", gen.expected_degree);
  gen.max_degree = doc.value("max_degree", gen.max_degree);
  const std::uint64_t seed = doc.value("seed", std::uint64_t{0});
  const std::size_t n_samples = doc.value("n_samples", std::size_t{1000});
  const std::size_t n_targets = doc.value("n_targets", std::size_t{0});
  const std::string model = doc.value("data_model", std::string("linear_gaussian"));
  const std::string mode = doc.value("target_mode", std::string("random"));
  gen.seed = synthetic::stream_seed(seed, 0, synthetic::Purpose::Graph);

  const Dag dag = synthetic::random_dag(gen);
  fs::create_directories(a.out);
  const fs::path dir(a.out);
  save_edge_list(dir / "graph.edges", MixedGraph::from_dag(dag));

  const auto param_seed = synthetic::stream_seed(seed, 0, synthetic::Purpose::Parameters);
  const auto data_seed = synthetic::stream_seed(seed, 0, synthetic::Purpose::Data);
  if (model == "linear_gaussian") {
    const auto spec = synthetic::random_sem(dag, param_seed);
    synthetic::save_spec(dir / "spec.json", spec);
    ci::save_csv(dir / "data.csv", synthetic::sample_linear_gaussian(spec, n_samples, data_seed));
  } else if (model == "binary") {
    const auto spec = synthetic::random_cpt(dag, param_seed);
    synthetic::save_spec(dir / "spec.json", spec);
    ci::save_csv(dir / "data.csv", synthetic::sample_binary(spec, n_samples, data_seed));
  } else {
    throw UsageError("unknown data_model '" + model + "'");
  }

  if (n_targets > 0) {
    if (mode != "random" && mode != "identifiable") throw UsageError("unknown target_mode '" + mode + "'");
    const auto targets = synthetic::sample_targets(
        dag, n_targets, mode == "random" ? synthetic::TargetMode::Random : synthetic::TargetMode::Identifiable,
        synthetic::stream_seed(seed, 0, synthetic::Purpose::Targets));
    std::ofstream t(dir / "targets.txt");
    std::string line;
    for (Vertex v : targets) line += (line.empty() ? "" : ",") + dag.label(v);
    t << line << '\n';
  }
  fmt::print("wrote {}\n", dir.string());
}

// discover ------------------------------------------------------------------

struct DiscoverArgs {
  std::string graph;
  std::string data;
  std::string algo = "snap-inf";
  std::size_t k = 0;
  std::string targets;
  std::string tester;
  double alpha = ci::kDefaultAlpha;
  std::string out = "result";
};

void run_discover(const DiscoverArgs& a) {
  if (a.graph.empty() == a.data.empty()) throw UsageError("give exactly one of --graph or --data");
  std::string tester_name = a.tester.empty() ? (a.graph.empty() ? "fisher-z" : "oracle") : a.tester;

  std::unique_ptr<ci::CITester> tester;
  std::vector<std::string> names;
  if (!a.graph.empty()) {
    if (tester_name != "oracle") throw UsageError("--graph only supports the oracle tester");
    const MixedGraph g = load_edge_list(a.graph);
    names = labels_of(g);
    tester = std::make_unique<ci::OracleTester>(to_dag(g));
  } else if (tester_name == "fisher-z") {
    auto data = ci::load_csv(a.data, ci::DataKind::Continuous);
    names = data.names();
    tester = std::make_unique<ci::FisherZTester>(data, a.alpha);
  } else if (tester_name == "chi-sq") {
    auto data = ci::load_csv(a.data, ci::DataKind::Categorical);
    names = data.names();
    tester = std::make_unique<ci::ChiSquareTester>(std::move(data), a.alpha);
  } else {
    throw UsageError("--data needs --tester fisher-z or chi-sq");
  }

  const VertexSet all = VertexSet::full(names.size());
  discovery::DiscoveryResult result;
  if (a.algo == "pc") {
    result = discovery::pc(all, *tester);
  } else {
    if (a.targets.empty()) throw UsageError("--targets is required for " + a.algo);
    const VertexSet targets = lookup_all(names, a.targets);
    if (a.algo == "snap-inf") {
      result = discovery::snap_inf(all, targets, *tester);
    } else if (a.algo == "snap-k") {
      result = discovery::snap_k(all, targets, a.k, *tester);
    } else if (a.algo == "snap-k+pc") {
      result = discovery::snap_prefilter_then(discovery::GlobalAlgorithm::Pc, all, targets, a.k, *tester);
    } else {
      throw UsageError("unknown --algo '" + a.algo + "'");
    }
  }
  discovery::save_result(a.out, result, names, a.algo);
  fmt::print("{} vertices remain, {} CI tests; wrote {}.edges and {}.json\n", result.remaining.size(),
             result.tests.total, a.out, a.out);
}

// estimate ------------------------------------------------------------------

struct EstimateArgs {
  std::string graph;
  std::string data;
  std::string targets;
  std::string out;
};

void run_estimate(const EstimateArgs& a) {
  const MixedGraph g = load_edge_list(a.graph);
  const auto names = labels_of(g);
  auto data = ci::load_csv(a.data, ci::DataKind::Continuous).select_columns(names);
  const VertexSet targets = lookup_all(names, a.targets);
  if (targets.size() < 2) throw UsageError("--targets needs at least two vertices");

  adjustment::EstimateMap estimates;
  for (Vertex x : targets)
    for (Vertex y : targets)
      if (x != y) estimates[{x, y}] = adjustment::estimate_effect(data, g, x, y);
  if (a.out.empty()) {
    adjustment::write_effect_report(std::cout, estimates, names);
  } else {
    std::ofstream out(a.out);
    if (!out) throw Error(Errc::ParseError, "cannot write " + a.out);
    adjustment::write_effect_report(out, estimates, names);
  }
}

// bench ---------------------------------------------------------------------

struct BenchArgs {
  std::string config;
  std::string out;
  std::optional<std::size_t> workers;
  std::optional<std::uint64_t> seed;
};

void run_bench(const BenchArgs& a) {
  bench::ExperimentConfig cfg;
  try {
    cfg = bench::load_config(a.config);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (!a.out.empty()) cfg.output = a.out;
  if (a.workers) cfg.workers = *a.workers;
  if (a.seed) cfg.seed = *a.seed;
  const auto rows = bench::run_experiment(cfg);
  bench::save_results(cfg.output, rows, cfg.trim);
  std::size_t errors = 0;
  for (const auto& r : rows) errors += r.ok() ? 0 : 1;
  fmt::print("{} rows ({} errors) written to {}\n", rows.size(), errors, cfg.output.string());
}

// dsep ----------------------------------------------------------------------

struct DsepArgs {
  std::string graph;
  std::string x;
  std::string y;
  std::string given;
};

void run_dsep(const DsepArgs& a) {
  const MixedGraph g = load_edge_list(a.graph);
  const auto names = labels_of(g);
  const Dag dag = to_dag(g);
  const Vertex x = lookup(names, a.x);
  const Vertex y = lookup(names, a.y);
  const VertexSet given = lookup_all(names, a.given);
  if (x == y || given.contains(x) || given.contains(y)) throw UsageError("x, y and the conditioning set must be disjoint");
  fmt::print("{}\n", d_separated(dag, x, y, given) ? "true" : "false");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Target-directed causal discovery and effect estimation"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a random graph, model and dataset");
  generate->add_option("--config", gen.config, "JSON generation config")->required();
  generate->add_option("--out", gen.out, "Output directory")->required();

  DiscoverArgs disc;
  auto* discover = app.add_subcommand("discover", "Run causal discovery");
  discover->add_option("--graph", disc.graph, "Ground-truth DAG (edge list) for the oracle tester");
  discover->add_option("--data", disc.data, "CSV dataset");
  discover->add_option("--algo", disc.algo, "snap-inf | snap-k | snap-k+pc | pc")->capture_default_str();
  discover->add_option("--k", disc.k, "Maximum order for snap-k")->capture_default_str();
  discover->add_option("--targets", disc.targets, "Comma-separated target names");
  discover->add_option("--tester", disc.tester, "oracle | fisher-z | chi-sq");
  discover->add_option("--alpha", disc.alpha, "Significance level")->capture_default_str();
  discover->add_option("--out", disc.out, "Output prefix")->capture_default_str();

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Estimate pairwise effects between targets");
  estimate->add_option("--graph", est.graph, "Discovered graph (edge list)")->required();
  estimate->add_option("--data", est.data, "Held-out CSV dataset")->required();
  estimate->add_option("--targets", est.targets, "Comma-separated target names")->required();
  estimate->add_option("--out", est.out, "Effect report CSV (default: stdout)");

  BenchArgs ben;
  auto* benchmark = app.add_subcommand("bench", "Run an experiment sweep");
  benchmark->add_option("--config", ben.config, "JSON sweep config")->required();
  benchmark->add_option("--out", ben.out, "Results CSV (overrides the config)");
  benchmark->add_option("--workers", ben.workers, "Worker threads (0 = all cores)");
  benchmark->add_option("--seed", ben.seed, "Base seed (overrides the config)");

  DsepArgs ds;
  auto* dsep = app.add_subcommand("dsep", "Test d-separation in a DAG");
  dsep->add_option("--graph", ds.graph, "DAG (edge list)")->required();
  dsep->add_option("--x", ds.x, "First vertex")->required();
  dsep->add_option("--y", ds.y, "Second vertex")->required();
  dsep->add_option("--given", ds.given, "Comma-separated conditioning set");

  std::size_t n_vertices = 0;
  std::size_t n_targets = 0;
  auto* expected = app.add_subcommand("expected-ancestors", "Expected size of the ancestral set");
  expected->add_option("--n", n_vertices, "Number of vertices")->required();
  expected->add_option("--t", n_targets, "Number of targets")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*generate) run_generate(gen);
    if (*discover) run_discover(disc);
    if (*estimate) run_estimate(est);
    if (*benchmark) run_bench(ben);
    if (*dsep) run_dsep(ds);
    if (*expected) {
      if (n_targets < 1 || n_targets > n_vertices) throw UsageError("need 1 <= t <= n");
      fmt::print("{}\n", synthetic::expected_possible_ancestors(n_vertices, n_targets));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
