#include <boost/math/distributions/chi_squared.hpp>
#include <limits>
#include <map>

#include "snap/ci/testers.hpp"
#include "snap/error.hpp"

namespace snap::ci {

namespace {

constexpr std::size_t kMinStratumSamples = 10;
constexpr double kMinExpectedCount = 5.0;

void require_categorical(const Dataset& data) {
  if (data.kind() != DataKind::Categorical) {
    throw Error(Errc::NotCategorical, "chi-square test needs categorical data");
  }
}

}  // namespace

ChiSquareStatistic chi_square_statistic(const Dataset& data, Vertex x, Vertex y,
                                        std::span<const Vertex> s) {
  require_categorical(data);
  const auto lx = static_cast<std::size_t>(data.levels(x));
  const auto ly = static_cast<std::size_t>(data.levels(y));

  // Mixed-radix code of each sample's configuration of s.
  std::uint64_t radix_product = 1;
  for (Vertex v : s) {
    const auto levels = static_cast<std::uint64_t>(data.levels(v));
    if (radix_product > std::numeric_limits<std::uint64_t>::max() / levels) {
      throw Error(Errc::InvalidQuery, "conditioning set too large to stratify");
    }
    radix_product *= levels;
  }

  const std::size_t n = data.n_samples();
  auto cx = data.column(x);
  auto cy = data.column(y);
  std::map<std::uint64_t, std::vector<std::uint32_t>> strata;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t code = 0;
    for (Vertex v : s) {
      code = code * static_cast<std::uint64_t>(data.levels(v)) +
             static_cast<std::uint64_t>(data.column(v)[i]);
    }
    auto& table = strata[code];
    if (table.empty()) table.assign(lx * ly, 0);
    ++table[static_cast<std::size_t>(cx[i]) * ly + static_cast<std::size_t>(cy[i])];
  }

  ChiSquareStatistic out;
  std::vector<double> rows(lx), cols(ly);
  for (const auto& [code, table] : strata) {
    std::fill(rows.begin(), rows.end(), 0.0);
    std::fill(cols.begin(), cols.end(), 0.0);
    double total = 0;
    for (std::size_t a = 0; a < lx; ++a) {
      for (std::size_t b = 0; b < ly; ++b) {
        const double c = table[a * ly + b];
        rows[a] += c;
        cols[b] += c;
        total += c;
      }
    }
    bool usable = total >= static_cast<double>(kMinStratumSamples);
    for (std::size_t a = 0; usable && a < lx; ++a)
      for (std::size_t b = 0; usable && b < ly; ++b)
        if (rows[a] * cols[b] / total < kMinExpectedCount) usable = false;
    if (!usable) {
      ++out.strata_skipped;
      continue;
    }
    for (std::size_t a = 0; a < lx; ++a) {
      for (std::size_t b = 0; b < ly; ++b) {
        const double expected = rows[a] * cols[b] / total;
        const double diff = table[a * ly + b] - expected;
        out.statistic += diff * diff / expected;
      }
    }
    out.dof += (lx - 1) * (ly - 1);
    ++out.strata_used;
  }
  return out;
}

bool chi_square_test(const Dataset& data, Vertex x, Vertex y, std::span<const Vertex> s, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(Errc::InvalidConfig, "alpha must lie in (0, 1)");
  const auto stat = chi_square_statistic(data, x, y, s);
  if (stat.dof == 0) return true;
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(stat.dof));
  const double p_value = boost::math::cdf(boost::math::complement(dist, stat.statistic));
  return p_value > alpha;
}

ChiSquareTester::ChiSquareTester(Dataset data, double alpha) : data_(std::move(data)), alpha_(alpha) {
  require_categorical(data_);
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(Errc::InvalidConfig, "alpha must lie in (0, 1)");
}

bool ChiSquareTester::evaluate(Vertex x, Vertex y, std::span<const Vertex> s) {
  return chi_square_test(data_, x, y, s, alpha_);
}

}  // namespace snap::ci
