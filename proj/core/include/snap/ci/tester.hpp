#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "snap/graph/vertex_set.hpp"

namespace snap::ci {

/// Number of CI tests, bucketed by conditioning-set size.
struct TestCounts {
  std::vector<std::uint64_t> by_order;
  std::uint64_t total = 0;

  std::uint64_t at_order(std::size_t order) const {
    return order < by_order.size() ? by_order[order] : 0;
  }
  void add(std::size_t order, std::uint64_t count = 1);

  TestCounts& operator+=(const TestCounts& other);
  friend TestCounts operator-(const TestCounts& after, const TestCounts& before);
  friend bool operator==(const TestCounts&, const TestCounts&);
};

/// Thread-safe counter; `total` is always the sum of the per-order counts.
class TestCounter {
 public:
  void record(std::size_t order);
  TestCounts snapshot() const;
  void reset();

 private:
  mutable std::mutex mutex_;
  TestCounts counts_;
};

/// "Is x independent of y given s?"
///
/// Every call to `independent` is counted exactly once at order |s|, after
/// argument validation. Implementations must be deterministic and symmetric
/// in (x, y). A tester instance is not meant to be shared between concurrent
/// discovery runs, since the counts would mix.
class CITester {
 public:
  virtual ~CITester() = default;

  bool independent(Vertex x, Vertex y, std::span<const Vertex> s);
  bool independent(Vertex x, Vertex y, std::initializer_list<Vertex> s) {
    return independent(x, y, std::span<const Vertex>(s.begin(), s.size()));
  }

  virtual std::size_t n_vertices() const = 0;

  TestCounts counts() const { return counter_.snapshot(); }
  void reset_counts() { counter_.reset(); }

 protected:
  virtual bool evaluate(Vertex x, Vertex y, std::span<const Vertex> s) = 0;

 private:
  TestCounter counter_;
};

}  // namespace snap::ci
