#include "snap/ci/tester.hpp"

#include <algorithm>
#include <string>

#include "snap/error.hpp"

namespace snap::ci {

void TestCounts::add(std::size_t order, std::uint64_t count) {
  if (by_order.size() <= order) by_order.resize(order + 1, 0);
  by_order[order] += count;
  total += count;
}

TestCounts& TestCounts::operator+=(const TestCounts& other) {
  for (std::size_t i = 0; i < other.by_order.size(); ++i) add(i, other.by_order[i]);
  return *this;
}

TestCounts operator-(const TestCounts& after, const TestCounts& before) {
  TestCounts diff;
  for (std::size_t i = 0; i < after.by_order.size(); ++i) {
    const auto delta = after.by_order[i] - before.at_order(i);
    if (delta != 0) diff.add(i, delta);
  }
  return diff;
}

bool operator==(const TestCounts& a, const TestCounts& b) {
  if (a.total != b.total) return false;
  const auto n = std::max(a.by_order.size(), b.by_order.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.at_order(i) != b.at_order(i)) return false;
  return true;
}

void TestCounter::record(std::size_t order) {
  std::lock_guard lock(mutex_);
  counts_.add(order);
}

TestCounts TestCounter::snapshot() const {
  std::lock_guard lock(mutex_);
  return counts_;
}

void TestCounter::reset() {
  std::lock_guard lock(mutex_);
  counts_ = {};
}

bool CITester::independent(Vertex x, Vertex y, std::span<const Vertex> s) {
  const std::size_t n = n_vertices();
  if (x >= n || y >= n) throw Error(Errc::IndexOutOfRange, "CI query endpoint outside the vertex range");
  if (x == y) throw Error(Errc::InvalidQuery, "CI query with x == y");
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= n) throw Error(Errc::IndexOutOfRange, "conditioning vertex outside the vertex range");
    if (sorted[i] == x || sorted[i] == y) {
      throw Error(Errc::InvalidQuery, "CI query with an endpoint in the conditioning set");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw Error(Errc::InvalidQuery, "duplicate conditioning vertex " + std::to_string(sorted[i]));
    }
  }
  counter_.record(sorted.size());
  return evaluate(x, y, sorted);
}

}  // namespace snap::ci
