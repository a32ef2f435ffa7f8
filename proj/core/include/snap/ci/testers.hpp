#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "snap/ci/dataset.hpp"
#include "snap/ci/tester.hpp"
#include "snap/graph/dag.hpp"

namespace snap::ci {

inline constexpr double kDefaultAlpha = 0.05;

/// d-separation in a known DAG.
class OracleTester final : public CITester {
 public:
  explicit OracleTester(Dag dag) : dag_(std::move(dag)) {}

  std::size_t n_vertices() const override { return dag_.n_vertices(); }
  const Dag& dag() const noexcept { return dag_; }

 protected:
  bool evaluate(Vertex x, Vertex y, std::span<const Vertex> s) override;

 private:
  Dag dag_;
};

/// Partial correlation of x and y given s, read off the inverse of the
/// covariance submatrix over {x, y} + s. Throws `Errc::SingularCovariance`.
double partial_correlation(const Eigen::MatrixXd& covariance, Vertex x, Vertex y,
                           std::span<const Vertex> s);

/// Fisher z statistic sqrt(n - |s| - 3) * atanh(r).
double fisher_z_statistic(double partial_corr, std::size_t n_samples, std::size_t conditioning_size);

/// One-off Fisher-Z test; computes the needed covariance entries directly.
bool fisher_z_test(const Dataset& data, Vertex x, Vertex y, std::span<const Vertex> s,
                   double alpha = kDefaultAlpha);

/// Fisher-Z test over a continuous dataset with the covariance matrix
/// computed once at construction.
class FisherZTester final : public CITester {
 public:
  explicit FisherZTester(const Dataset& data, double alpha = kDefaultAlpha);

  std::size_t n_vertices() const override { return static_cast<std::size_t>(covariance_.rows()); }
  double alpha() const noexcept { return alpha_; }

 protected:
  bool evaluate(Vertex x, Vertex y, std::span<const Vertex> s) override;

 private:
  Eigen::MatrixXd covariance_;
  std::size_t n_samples_;
  double alpha_;
  double critical_;
};

struct ChiSquareStatistic {
  double statistic = 0.0;
  std::size_t dof = 0;
  std::size_t strata_used = 0;
  std::size_t strata_skipped = 0;
};

/// Pearson chi-square summed over the strata of s. Strata with fewer than
/// 10 samples or an expected cell count below 5 are skipped.
ChiSquareStatistic chi_square_statistic(const Dataset& data, Vertex x, Vertex y,
                                        std::span<const Vertex> s);

/// Independent iff p > alpha; also independent when every stratum was skipped.
bool chi_square_test(const Dataset& data, Vertex x, Vertex y, std::span<const Vertex> s,
                     double alpha = kDefaultAlpha);

class ChiSquareTester final : public CITester {
 public:
  explicit ChiSquareTester(Dataset data, double alpha = kDefaultAlpha);

  std::size_t n_vertices() const override { return data_.n_columns(); }

 protected:
  bool evaluate(Vertex x, Vertex y, std::span<const Vertex> s) override;

 private:
  Dataset data_;
  double alpha_;
};

/// Caches verdicts of another tester. Only queries it has not seen before
/// (up to swapping x and y and reordering s) reach the inner tester, so the
/// inner tester's counter counts distinct tests.
class MemoizingTester final : public CITester {
 public:
  explicit MemoizingTester(CITester& inner) : inner_(inner) {}

  std::size_t n_vertices() const override { return inner_.n_vertices(); }
  std::size_t cache_size() const noexcept;

  /// Drops cached verdicts for conditioning sets smaller than `order`. Only
  /// safe when no such query will be asked again, e.g. once a PC skeleton
  /// search has moved on to `order`.
  void forget_below(std::size_t order);

  /// With recording off, cached verdicts are still replayed but new ones are
  /// not stored. For callers that never repeat a query themselves.
  void set_recording(bool on) noexcept { recording_ = on; }

 protected:
  bool evaluate(Vertex x, Vertex y, std::span<const Vertex> s) override;

 private:
  // Keys of at most 16 vertices below 255 are stored as one byte per vertex
  // in an open-addressing table per conditioning-set size; anything else
  // goes to `wide_`.
  struct PackedKey {
    std::uint64_t lo = 0, hi = 0;
    bool operator==(const PackedKey&) const = default;
  };
  struct Table {
    std::vector<PackedKey> slots;
    std::vector<std::uint8_t> verdicts;
    std::size_t count = 0;
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<Vertex>& key) const noexcept;
  };

  bool packed_lookup(Table& table, const PackedKey& key, Vertex x, Vertex y, std::span<const Vertex> s);

  CITester& inner_;
  std::vector<Table> packed_;
  std::unordered_map<std::vector<Vertex>, bool, KeyHash> wide_;
  bool recording_ = true;
};

}  // namespace snap::ci
