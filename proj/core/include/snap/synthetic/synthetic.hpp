#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "snap/ci/dataset.hpp"
#include "snap/graph/dag.hpp"

namespace snap::synthetic {

// Random streams. Every random quantity of a replicate comes from its own
// mt19937_64 whose seed is a splitmix64 hash of (base seed, replicate,
// purpose), so e.g. changing the sample size leaves graph and targets intact.

enum class Purpose : std::uint64_t { Graph = 1, Parameters, Targets, Data, Split, Truth };

std::uint64_t stream_seed(std::uint64_t base, std::uint64_t replicate, Purpose purpose);

using Rng = std::mt19937_64;

/// Labels "X1".."Xn".
std::vector<std::string> default_labels(std::size_t n);

struct GenConfig {
  std::size_t n_vertices = 10;
  double expected_degree = 2.0;
  std::size_t max_degree = 10;
  std::uint64_t seed = 0;
};

/// Erdős–Rényi DAG over a random vertex order: each forward pair gets an edge
/// with probability expected_degree / (n - 1). Edges at vertices over the
/// degree cap are dropped and replaced by edges between vertices with spare
/// capacity. Throws `Errc::InvalidConfig` or `Errc::InfeasibleConfig`.
Dag random_dag(const GenConfig& cfg);

/// Linear Gaussian SEM: X_v = sum_p w_pv X_p + e_v with e_v ~ N(0, noise_sd[v]).
struct SemSpec {
  Dag dag;
  std::vector<double> weights;  // aligned with dag.edges()
  std::vector<double> noise_sd;
};

/// Weights with |w| uniform in [0.5, 3] and a random sign; unit noise.
SemSpec random_sem(const Dag& dag, std::uint64_t seed);

/// Binary network. tables[v][c] = P(X_v = 1 | parents in configuration c),
/// where bit i of c is the value of the i-th parent in ascending order.
struct CptSpec {
  Dag dag;
  std::vector<std::vector<double>> tables;
};

/// Every table entry uniform in [0, 1].
CptSpec random_cpt(const Dag& dag, std::uint64_t seed);

/// Checks weight/table shapes; throws `Errc::InvalidConfig`.
void validate(const SemSpec& spec);
void validate(const CptSpec& spec);

ci::Dataset sample_linear_gaussian(const SemSpec& spec, std::size_t n, std::uint64_t seed);
ci::Dataset sample_binary(const CptSpec& spec, std::size_t n, std::uint64_t seed);

/// Monte Carlo estimate of P(y=1 | do(x=1)) - P(y=1 | do(x=0)); both arms
/// share the same uniforms, so the estimate is exactly 0 when y is not a
/// descendant of x.
double binary_interventional_effect(const CptSpec& spec, Vertex x, Vertex y, std::size_t n,
                                    std::uint64_t seed);

/// Exact analytic covariance (I - W)^-T diag(noise^2) (I - W)^-1, row-major.
std::vector<double> sem_covariance(const SemSpec& spec);

enum class TargetMode { Random, Identifiable };

inline constexpr std::size_t kTargetRetries = 10000;

/// Random mode: uniform without replacement. Identifiable mode: rejection
/// sampling until every ordered pair is amenable in the CPDAG and every target
/// is an ancestor or descendant of another; `Errc::NoIdentifiableSet` after
/// `retries` draws.
VertexSet sample_targets(const Dag& dag, std::size_t n_targets, TargetMode mode, std::uint64_t seed,
                         std::size_t retries = kTargetRetries);

/// Expected rank of the highest-ranked of n_targets vertices drawn uniformly
/// from a topological order of n_vertices, computed exactly.
double expected_possible_ancestors(std::size_t n_vertices, std::size_t n_targets);

// JSON serialisation. Vertices are referenced by label.
std::string to_json(const SemSpec& spec);
std::string to_json(const CptSpec& spec);
SemSpec sem_from_json(const std::string& text);
CptSpec cpt_from_json(const std::string& text);
void save_spec(const std::filesystem::path& path, const SemSpec& spec);
void save_spec(const std::filesystem::path& path, const CptSpec& spec);
SemSpec load_sem(const std::filesystem::path& path);
CptSpec load_cpt(const std::filesystem::path& path);

}  // namespace snap::synthetic
