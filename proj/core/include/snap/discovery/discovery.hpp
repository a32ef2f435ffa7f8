#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "snap/ci/tester.hpp"
#include "snap/graph/mixed_graph.hpp"
#include "snap/graph/sepset_map.hpp"
#include "snap/graph/vertex_set.hpp"

namespace snap::discovery {

/// Mutable state of an order-escalating skeleton search. All graphs keep the
/// original vertex indexing; pruned vertices simply lose their edges.
struct DiscoveryState {
  VertexSet remaining;
  MixedGraph skeleton;
  SepsetMap sepsets;
  MixedGraph oriented;
  std::size_t order = 0;

  /// Complete undirected skeleton over `vertices`.
  static DiscoveryState start(const VertexSet& vertices);

  /// Drops skeleton edges that touch vertices outside `remaining`.
  void restrict_to_remaining();
};

struct SkeletonStepStats {
  /// Some adjacent pair had at least `order` other neighbours to condition on.
  bool had_candidates = false;
  std::size_t edges_removed = 0;
};

/// One PC skeleton pass at a fixed conditioning-set size. Vertices, their
/// neighbours and the candidate sets are all visited in ascending order, and
/// an edge is removed as soon as a separating set is found.
SkeletonStepStats skeleton_step(DiscoveryState& state, ci::CITester& tester, std::size_t order);

/// PC-style v-structure orientation: every unshielded triple x - z - y with z
/// outside sepset(x, y) gets arrowheads at z. Marks already present are kept,
/// so conflicting triples leave bidirected edges.
MixedGraph orient_vstructures_pc(const MixedGraph& skeleton, const SepsetMap& sepsets);

struct RfciStats {
  std::size_t triples_processed = 0;  // popped with z outside sepset(x, y)
  std::size_t edges_deleted = 0;
  std::size_t max_sepset = 0;         // largest sepset(x, y) a minimisation started from
  std::uint64_t tests = 0;            // queries issued to the tester

  /// Two tests per processed triple plus max_sepset^2 per deleted edge.
  std::uint64_t budget() const {
    return 2 * triples_processed + edges_deleted * max_sepset * max_sepset;
  }
};

struct RfciOrientation {
  MixedGraph oriented;
  MixedGraph skeleton;  // input skeleton minus the edges found spurious
  RfciStats stats;
};

/// RFCI-style v-structure orientation. Unshielded triples are only oriented
/// once both x and y are verified dependent on z given sepset(x, y); an
/// independence found on the way removes the edge, stores a minimal
/// separating set in `sepsets`, and turns the triangles over that edge into
/// new unshielded triples. The worklist starts in lexicographic (x, z, y)
/// order with x < y, and new triples are appended.
RfciOrientation orient_vstructures_rfci(const MixedGraph& skeleton, SepsetMap& sepsets,
                                        ci::CITester& tester);

/// Possible ancestors of `targets` in `g`; bidirected edges block.
VertexSet prune_non_ancestors(const MixedGraph& g, const VertexSet& targets);

struct DiscoveryResult {
  /// Output graph re-indexed over `to_original`.
  MixedGraph graph;
  std::vector<Vertex> to_original;
  /// Same vertices as a set over the tester's full vertex range.
  VertexSet remaining;
  SepsetMap sepsets;
  /// Distinct CI tests issued to the caller's tester.
  ci::TestCounts tests;
  /// Queries made by the algorithm before de-duplication.
  std::uint64_t queries = 0;
  std::vector<RfciStats> rfci_calls;
  std::size_t max_order = 0;
  std::chrono::nanoseconds wall_time{0};

  /// `graph` placed back into the original indexing.
  MixedGraph lifted() const;
};

/// Sequential non-ancestor pruning up to conditioning order `k`.
DiscoveryResult snap_k(const VertexSet& vertices, const VertexSet& targets, std::size_t k,
                       ci::CITester& tester);

/// SNAP run to completion, followed by Meek's rules and a final pruning.
DiscoveryResult snap_inf(const VertexSet& vertices, const VertexSet& targets, ci::CITester& tester);

/// Order-escalating PC: skeleton, PC v-structures, Meek's rules.
DiscoveryResult pc(const VertexSet& vertices, ci::CITester& tester);

enum class GlobalAlgorithm { Pc };

/// SNAP(k) to shrink the vertex set, then a global algorithm on what remains.
/// Both phases share one test cache, so counts accumulate without repeats.
DiscoveryResult snap_prefilter_then(GlobalAlgorithm algorithm, const VertexSet& vertices,
                                    const VertexSet& targets, std::size_t k, ci::CITester& tester);

}  // namespace snap::discovery
