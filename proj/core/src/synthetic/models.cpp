#include <Eigen/Dense>

#include "snap/error.hpp"
#include "snap/synthetic/synthetic.hpp"

namespace snap::synthetic {

namespace {

std::vector<std::string> labels_of(const Dag& dag) {
  return dag.labels().empty() ? default_labels(dag.n_vertices()) : dag.labels();
}

std::size_t edge_index(const Dag& dag, Vertex from, Vertex to) {
  const auto& edges = dag.edges();
  return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), Edge{from, to}) - edges.begin());
}

std::size_t parent_config(const Dag& dag, Vertex v, const std::vector<std::uint8_t>& values) {
  std::size_t c = 0;
  const auto pa = dag.parents(v);
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (values[pa[i]]) c |= std::size_t{1} << i;
  return c;
}

}  // namespace

SemSpec random_sem(const Dag& dag, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> magnitude(0.5, 3.0);
  std::bernoulli_distribution negative(0.5);
  SemSpec spec{dag, {}, std::vector<double>(dag.n_vertices(), 1.0)};
  spec.weights.reserve(dag.n_edges());
  for (std::size_t i = 0; i < dag.n_edges(); ++i) {
    const double w = magnitude(rng);
    spec.weights.push_back(negative(rng) ? -w : w);
  }
  return spec;
}

CptSpec random_cpt(const Dag& dag, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  CptSpec spec{dag, {}};
  spec.tables.resize(dag.n_vertices());
  for (Vertex v = 0; v < dag.n_vertices(); ++v) {
    const std::size_t rows = std::size_t{1} << dag.parents(v).size();
    spec.tables[v].resize(rows);
    for (auto& p : spec.tables[v]) p = prob(rng);
  }
  return spec;
}

void validate(const SemSpec& spec) {
  if (spec.weights.size() != spec.dag.n_edges()) throw Error(Errc::InvalidConfig, "one weight per edge required");
  if (spec.noise_sd.size() != spec.dag.n_vertices()) {
    throw Error(Errc::InvalidConfig, "one noise scale per vertex required");
  }
  for (double s : spec.noise_sd)
    if (!(s >= 0.0)) throw Error(Errc::InvalidConfig, "noise scale must be nonnegative");
}

void validate(const CptSpec& spec) {
  if (spec.tables.size() != spec.dag.n_vertices()) throw Error(Errc::InvalidConfig, "one table per vertex required");
  for (Vertex v = 0; v < spec.dag.n_vertices(); ++v) {
    if (spec.dag.parents(v).size() >= 63 ||
        spec.tables[v].size() != std::size_t{1} << spec.dag.parents(v).size()) {
      throw Error(Errc::InvalidConfig, "table size must be 2^(number of parents)");
    }
    for (double p : spec.tables[v])
      if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidConfig, "probabilities must lie in [0, 1]");
  }
}

ci::Dataset sample_linear_gaussian(const SemSpec& spec, std::size_t n, std::uint64_t seed) {
  validate(spec);
  const Dag& dag = spec.dag;
  Rng rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<std::vector<double>> cols(dag.n_vertices(), std::vector<double>(n));
  // Row-wise so a fixed seed gives the same first rows regardless of n.
  for (std::size_t r = 0; r < n; ++r) {
    for (Vertex v : dag.topological_order()) {
      double x = spec.noise_sd[v] * noise(rng);
      for (Vertex p : dag.parents(v)) x += spec.weights[edge_index(dag, p, v)] * cols[p][r];
      cols[v][r] = x;
    }
  }
  return ci::Dataset::continuous(labels_of(dag), std::move(cols));
}

ci::Dataset sample_binary(const CptSpec& spec, std::size_t n, std::uint64_t seed) {
  validate(spec);
  const Dag& dag = spec.dag;
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::vector<double>> cols(dag.n_vertices(), std::vector<double>(n));
  std::vector<std::uint8_t> row(dag.n_vertices());
  for (std::size_t r = 0; r < n; ++r) {
    for (Vertex v : dag.topological_order()) {
      row[v] = unif(rng) < spec.tables[v][parent_config(dag, v, row)] ? 1 : 0;
      cols[v][r] = row[v];
    }
  }
  return ci::Dataset::categorical(labels_of(dag), std::move(cols), std::vector<int>(dag.n_vertices(), 2));
}

double binary_interventional_effect(const CptSpec& spec, Vertex x, Vertex y, std::size_t n,
                                    std::uint64_t seed) {
  validate(spec);
  const Dag& dag = spec.dag;
  if (x >= dag.n_vertices() || y >= dag.n_vertices()) throw Error(Errc::IndexOutOfRange, "vertex outside the graph");
  if (x == y) throw Error(Errc::InvalidQuery, "cause and outcome coincide");
  if (n == 0) throw Error(Errc::InvalidQuery, "need at least one Monte Carlo sample");
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> u(dag.n_vertices());
  std::vector<std::uint8_t> on(dag.n_vertices());
  std::vector<std::uint8_t> off(dag.n_vertices());
  long long diff = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (auto& value : u) value = unif(rng);
    for (Vertex v : dag.topological_order()) {
      if (v == x) {
        on[v] = 1;
        off[v] = 0;
        continue;
      }
      on[v] = u[v] < spec.tables[v][parent_config(dag, v, on)] ? 1 : 0;
      off[v] = u[v] < spec.tables[v][parent_config(dag, v, off)] ? 1 : 0;
    }
    diff += static_cast<int>(on[y]) - static_cast<int>(off[y]);
  }
  return static_cast<double>(diff) / static_cast<double>(n);
}

std::vector<double> sem_covariance(const SemSpec& spec) {
  validate(spec);
  const auto n = static_cast<Eigen::Index>(spec.dag.n_vertices());
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  const auto& edges = spec.dag.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    w(static_cast<Eigen::Index>(edges[i].from), static_cast<Eigen::Index>(edges[i].to)) = spec.weights[i];
  // Row-vector convention X = X W + e, so X = e (I - W)^-1.
  const Eigen::MatrixXd inv = (Eigen::MatrixXd::Identity(n, n) - w).inverse();
  Eigen::VectorXd var(n);
  for (Eigen::Index i = 0; i < n; ++i) var(i) = spec.noise_sd[static_cast<std::size_t>(i)] * spec.noise_sd[static_cast<std::size_t>(i)];
  const Eigen::MatrixXd cov = inv.transpose() * var.asDiagonal() * inv;
  std::vector<double> out(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] = cov(i, j);
  return out;
}

}  // namespace snap::synthetic
