#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "snap/ci/tester.hpp"
#include "snap/synthetic/synthetic.hpp"

namespace snap::bench {

enum class Algorithm { Pc, SnapInf, SnapK, SnapKThenPc };

struct AlgorithmSpec {
  Algorithm kind = Algorithm::SnapInf;
  std::size_t k = 0;

  /// "pc", "snap_inf", "snap_k:<k>" or "snap_k+pc:<k>".
  std::string name() const;
  friend bool operator==(const AlgorithmSpec&, const AlgorithmSpec&) = default;
};

/// Inverse of `AlgorithmSpec::name`; throws `Errc::InvalidConfig`.
AlgorithmSpec parse_algorithm(const std::string& text);

enum class TesterKind { Oracle, FisherZ, ChiSquare };
enum class DataModel { LinearGaussian, Binary };

std::string to_string(TesterKind kind);
std::string to_string(DataModel model);

struct ExperimentConfig {
  std::vector<std::size_t> n_vertices{20};
  std::vector<double> expected_degree{2.0};
  std::vector<std::size_t> n_targets{2};
  /// Total samples per replicate; with effect estimation they are split in
  /// half between discovery and estimation.
  std::vector<std::size_t> n_samples{1000};
  std::size_t max_degree = 10;
  std::vector<AlgorithmSpec> algorithms{{Algorithm::Pc, 0}, {Algorithm::SnapInf, 0}};
  TesterKind tester = TesterKind::Oracle;
  DataModel data_model = DataModel::LinearGaussian;
  double alpha = 0.05;
  synthetic::TargetMode target_mode = synthetic::TargetMode::Random;
  bool estimate_effects = false;
  std::size_t replicates = 1;
  std::uint64_t seed = 0;
  double trim = 0.05;
  /// 0 means one worker per hardware thread.
  std::size_t workers = 0;
  /// Monte Carlo draws for binary ground-truth effects.
  std::size_t truth_samples = 200000;
  /// Optional fixed ground-truth graph (edge-list file) and target names;
  /// when set, the n_vertices and expected_degree axes are ignored.
  std::optional<std::filesystem::path> graph_file;
  std::vector<std::string> fixed_targets;
  std::filesystem::path output = "results.csv";
};

/// Parses and validates a JSON config; throws `Errc::InvalidConfig` or
/// `Errc::ParseError`. Relative graph paths resolve against `base_dir`.
ExperimentConfig parse_config(const std::string& json, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);
void validate(const ExperimentConfig& cfg);

struct MetricsRow {
  std::size_t n_vertices = 0;
  double expected_degree = 0.0;
  std::size_t n_targets = 0;
  std::size_t n_samples = 0;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::string tester;
  double alpha = 0.0;
  ci::TestCounts tests;
  double wall_ms = 0.0;
  std::size_t shd_on_possan = 0;
  std::optional<double> intervention_distance;
  std::size_t n_remaining = 0;
  std::size_t n_true_possan = 0;
  /// Empty on success; otherwise the failure and all metrics are zero.
  std::string error;

  bool ok() const { return error.empty(); }
  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

/// One row per grid point x replicate x algorithm, in that nesting order
/// (grid axes vary n_vertices slowest, then degree, targets, samples).
std::vector<MetricsRow> run_experiment(const ExperimentConfig& cfg);

struct SummaryRow {
  std::size_t n_vertices = 0;
  double expected_degree = 0.0;
  std::size_t n_targets = 0;
  std::size_t n_samples = 0;
  std::string algorithm;
  std::size_t n_rows = 0;
  std::size_t n_errors = 0;
  double ci_tests_total = 0.0;
  double wall_ms = 0.0;
  double shd_on_possan = 0.0;
  std::optional<double> intervention_distance;
  double n_remaining = 0.0;
  double n_true_possan = 0.0;
};

/// Mean of `values` after dropping floor(trim * size) values at each end.
double trimmed_mean(std::vector<double> values, double trim);

/// Per (grid point, algorithm) trimmed means over the successful rows; each
/// metric is trimmed independently.
std::vector<SummaryRow> summarize(const std::vector<MetricsRow>& rows, double trim);

/// Fixed column order:
/// n_vertices,expected_degree,n_targets,n_samples,replicate,seed,algorithm,
/// tester,alpha,ci_tests_total,ci_tests_by_order,wall_ms,shd_on_possan,
/// intervention_distance,n_remaining,n_true_possan,error
void write_rows_csv(std::ostream& out, const std::vector<MetricsRow>& rows);
std::vector<MetricsRow> read_rows_csv(std::istream& in);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

/// `<output>` and `<output stem>.summary.csv` next to it.
void save_results(const std::filesystem::path& output, const std::vector<MetricsRow>& rows, double trim);

}  // namespace snap::bench
