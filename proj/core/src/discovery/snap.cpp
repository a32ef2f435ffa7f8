#include <algorithm>
#include <chrono>

#include "snap/ci/testers.hpp"
#include "snap/discovery/discovery.hpp"
#include "snap/error.hpp"

namespace snap::discovery {

namespace {

using Clock = std::chrono::steady_clock;

void check_vertices(const VertexSet& vertices, const ci::CITester& tester) {
  if (vertices.universe() != tester.n_vertices()) {
    throw Error(Errc::SizeMismatch, "vertex set universe differs from the tester's vertex count");
  }
  if (vertices.empty()) throw Error(Errc::EmptySelection, "discovery over no vertices");
}

void check_targets(const VertexSet& vertices, const VertexSet& targets) {
  if (targets.empty()) throw Error(Errc::EmptySelection, "no targets given");
  if (!targets.is_subset_of(vertices)) throw Error(Errc::InvalidQuery, "targets outside the vertex set");
}

/// Tracks what a public entry point reports: tests reaching the caller's
/// tester, raw queries, and elapsed time.
class Run {
 public:
  explicit Run(ci::CITester& tester)
      : base_(tester), memo_(tester), before_(tester.counts()), started_(Clock::now()) {}

  ci::MemoizingTester& tester() { return memo_; }

  DiscoveryResult finish(const MixedGraph& oriented, const VertexSet& remaining, SepsetMap sepsets,
                         std::vector<RfciStats> rfci, std::size_t max_order) {
    DiscoveryResult r;
    auto sub = induced_subgraph(oriented, remaining);
    r.graph = std::move(sub.graph);
    r.to_original = std::move(sub.to_original);
    r.remaining = remaining;
    r.sepsets = std::move(sepsets);
    r.rfci_calls = std::move(rfci);
    r.max_order = max_order;
    r.tests = base_.counts() - before_;
    r.queries = memo_.counts().total;
    r.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started_);
    return r;
  }

 private:
  ci::CITester& base_;
  ci::MemoizingTester memo_;
  ci::TestCounts before_;
  Clock::time_point started_;
};

struct Outcome {
  DiscoveryState state;
  std::vector<RfciStats> rfci;
  std::size_t max_order = 0;
};

Outcome run_snap(const VertexSet& vertices, const VertexSet& targets, std::size_t k,
                 ci::CITester& tester) {
  Outcome out;
  auto& st = out.state;
  st = DiscoveryState::start(vertices);
  for (std::size_t i = 0; i <= k; ++i) {
    st.restrict_to_remaining();
    const auto step = skeleton_step(st, tester, i);
    bool rfci_deleted = false;
    if (i < 2) {
      st.oriented = orient_vstructures_pc(st.skeleton, st.sepsets);
    } else {
      auto rfci = orient_vstructures_rfci(st.skeleton, st.sepsets, tester);
      st.oriented = std::move(rfci.oriented);
      st.skeleton = std::move(rfci.skeleton);
      rfci_deleted = rfci.stats.edges_deleted > 0;
      out.rfci.push_back(rfci.stats);
    }
    VertexSet next = prune_non_ancestors(st.oriented, targets) & st.remaining;
    const bool pruned = next != st.remaining;
    st.remaining = std::move(next);
    out.max_order = i;
    // Nothing changed and no larger conditioning sets exist: every further
    // iteration would reproduce this state exactly.
    if (i >= 2 && !step.had_candidates && !rfci_deleted && !pruned) break;
  }
  st.restrict_to_remaining();
  return out;
}

Outcome run_pc(const VertexSet& vertices, ci::MemoizingTester& tester) {
  Outcome out;
  auto& st = out.state;
  st = DiscoveryState::start(vertices);
  // Within PC a query is never repeated: orders only grow and skeleton_step
  // skips pairs it already saw from the other side. Earlier verdicts (from a
  // prefilter) are still replayed, but nothing new needs storing.
  tester.set_recording(false);
  for (std::size_t i = 0;; ++i) {
    tester.forget_below(i);
    out.max_order = i;
    if (!skeleton_step(st, tester, i).had_candidates) break;
  }
  st.oriented = meek_closure(orient_vstructures_pc(st.skeleton, st.sepsets));
  return out;
}

}  // namespace

MixedGraph DiscoveryResult::lifted() const {
  return lift(graph, to_original, remaining.universe());
}

DiscoveryResult snap_k(const VertexSet& vertices, const VertexSet& targets, std::size_t k,
                       ci::CITester& tester) {
  check_vertices(vertices, tester);
  check_targets(vertices, targets);
  Run run(tester);
  auto out = run_snap(vertices, targets, k, run.tester());
  return run.finish(out.state.oriented, out.state.remaining, std::move(out.state.sepsets),
                    std::move(out.rfci), out.max_order);
}

DiscoveryResult snap_inf(const VertexSet& vertices, const VertexSet& targets, ci::CITester& tester) {
  check_vertices(vertices, tester);
  check_targets(vertices, targets);
  Run run(tester);
  const std::size_t k = std::max<std::size_t>(vertices.size(), 2) - 2;
  auto out = run_snap(vertices, targets, k, run.tester());
  auto& st = out.state;
  st.oriented = meek_closure(std::move(st.oriented));
  st.remaining = prune_non_ancestors(st.oriented, targets) & st.remaining;
  st.restrict_to_remaining();
  return run.finish(st.oriented, st.remaining, std::move(st.sepsets), std::move(out.rfci), out.max_order);
}

DiscoveryResult pc(const VertexSet& vertices, ci::CITester& tester) {
  check_vertices(vertices, tester);
  Run run(tester);
  auto out = run_pc(vertices, run.tester());
  return run.finish(out.state.oriented, out.state.remaining, std::move(out.state.sepsets), {},
                    out.max_order);
}

DiscoveryResult snap_prefilter_then(GlobalAlgorithm algorithm, const VertexSet& vertices,
                                    const VertexSet& targets, std::size_t k, ci::CITester& tester) {
  check_vertices(vertices, tester);
  check_targets(vertices, targets);
  Run run(tester);
  auto pre = run_snap(vertices, targets, k, run.tester());
  switch (algorithm) {
    case GlobalAlgorithm::Pc: {
      auto out = run_pc(pre.state.remaining, run.tester());
      return run.finish(out.state.oriented, out.state.remaining, std::move(out.state.sepsets),
                        std::move(pre.rfci), std::max(pre.max_order, out.max_order));
    }
  }
  throw Error(Errc::InvalidConfig, "unknown global algorithm");
}

}  // namespace snap::discovery
