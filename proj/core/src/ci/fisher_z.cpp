#include <Eigen/LU>
#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>

#include "snap/ci/testers.hpp"
#include "snap/error.hpp"

namespace snap::ci {

namespace {

constexpr double kRankTolerance = 1e-10;
constexpr double kMaxAbsCorrelation = 1.0 - 1e-12;

double critical_value(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(Errc::InvalidConfig, "alpha must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - alpha / 2.0);
}

void require_samples(std::size_t n_samples, std::size_t conditioning_size) {
  if (n_samples <= conditioning_size + 3) {
    throw Error(Errc::InsufficientSamples, "Fisher-Z needs more than |S| + 3 samples, got " +
                                               std::to_string(n_samples));
  }
}

}  // namespace

double partial_correlation(const Eigen::MatrixXd& covariance, Vertex x, Vertex y,
                           std::span<const Vertex> s) {
  std::vector<Eigen::Index> idx{static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)};
  for (Vertex v : s) idx.push_back(static_cast<Eigen::Index>(v));
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = covariance(idx[i], idx[j]);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
  lu.setThreshold(kRankTolerance);
  if (!lu.isInvertible()) {
    throw Error(Errc::SingularCovariance, "covariance submatrix of size " + std::to_string(k) +
                                              " is not invertible");
  }
  const Eigen::MatrixXd precision = lu.inverse();
  const double denom = std::sqrt(precision(0, 0) * precision(1, 1));
  if (!(denom > 0.0)) throw Error(Errc::SingularCovariance, "non-positive precision diagonal");
  return std::clamp(-precision(0, 1) / denom, -kMaxAbsCorrelation, kMaxAbsCorrelation);
}

double fisher_z_statistic(double partial_corr, std::size_t n_samples, std::size_t conditioning_size) {
  require_samples(n_samples, conditioning_size);
  const double r = std::clamp(partial_corr, -kMaxAbsCorrelation, kMaxAbsCorrelation);
  return 0.5 * std::log((1.0 + r) / (1.0 - r)) *
         std::sqrt(static_cast<double>(n_samples - conditioning_size - 3));
}

bool fisher_z_test(const Dataset& data, Vertex x, Vertex y, std::span<const Vertex> s, double alpha) {
  if (data.kind() != DataKind::Continuous) throw Error(Errc::NotContinuous, "Fisher-Z needs continuous data");
  if (x == y || std::find(s.begin(), s.end(), x) != s.end() || std::find(s.begin(), s.end(), y) != s.end()) {
    throw Error(Errc::InvalidQuery, "Fisher-Z query with overlapping endpoints");
  }
  const std::size_t n = data.n_samples();
  require_samples(n, s.size());

  std::vector<Vertex> vars{x, y};
  vars.insert(vars.end(), s.begin(), s.end());
  const auto k = static_cast<Eigen::Index>(vars.size());
  Eigen::MatrixXd block(static_cast<Eigen::Index>(n), k);
  for (Eigen::Index j = 0; j < k; ++j) {
    auto col = data.column(vars[static_cast<std::size_t>(j)]);
    for (std::size_t i = 0; i < n; ++i) block(static_cast<Eigen::Index>(i), j) = col[i];
  }
  const Eigen::MatrixXd centered = block.rowwise() - block.colwise().mean();
  const Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(n - 1);

  std::vector<Vertex> local_s(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) local_s[i] = i + 2;
  const double r = partial_correlation(cov, 0, 1, local_s);
  return std::abs(fisher_z_statistic(r, n, s.size())) <= critical_value(alpha);
}

FisherZTester::FisherZTester(const Dataset& data, double alpha)
    : n_samples_(data.n_samples()), alpha_(alpha), critical_(critical_value(alpha)) {
  if (data.kind() != DataKind::Continuous) throw Error(Errc::NotContinuous, "Fisher-Z needs continuous data");
  if (n_samples_ < 2) throw Error(Errc::InsufficientSamples, "Fisher-Z needs at least 2 samples");
  const auto n = static_cast<Eigen::Index>(n_samples_);
  const auto p = static_cast<Eigen::Index>(data.n_columns());
  Eigen::MatrixXd x(n, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    auto col = data.column(static_cast<std::size_t>(j));
    for (Eigen::Index i = 0; i < n; ++i) x(i, j) = col[static_cast<std::size_t>(i)];
  }
  x.rowwise() -= x.colwise().mean();
  covariance_ = x.transpose() * x / static_cast<double>(n_samples_ - 1);
}

bool FisherZTester::evaluate(Vertex x, Vertex y, std::span<const Vertex> s) {
  require_samples(n_samples_, s.size());
  const double r = partial_correlation(covariance_, x, y, s);
  return std::abs(fisher_z_statistic(r, n_samples_, s.size())) <= critical_;
}

}  // namespace snap::ci
