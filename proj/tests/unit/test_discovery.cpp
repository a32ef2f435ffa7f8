#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "snap/ci/testers.hpp"
#include "snap/discovery/discovery.hpp"
#include "snap/graph/dag.hpp"
#include "snap/graph/edge_list.hpp"

using namespace snap;
using namespace snap::discovery;
using namespace fixtures;

namespace {

VertexSet from_mask(const oracle::Mask& m) {
  const auto v = oracle::members(m);
  return VertexSet(m.size(), std::span<const Vertex>(v));
}

Vertex index_of(const Dag& dag, const std::string& label) {
  const auto& l = dag.labels();
  return static_cast<Vertex>(std::find(l.begin(), l.end(), label) - l.begin());
}

Dag load_more_tests() {
  return to_dag(load_edge_list(std::string(SNAP_TEST_DATA_DIR) + "/more_tests.edges"));
}

struct Instance {
  Dag dag;
  VertexSet targets;
};

Instance random_instance(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> nd(3, max_n);
  const std::size_t n = nd(rng);
  std::uniform_int_distribution<int> dd(2, 3);
  const double p = std::min(1.0, dd(rng) / static_cast<double>(n - 1));
  Dag dag = oracle::random_dag(n, p, rng);
  std::uniform_int_distribution<std::size_t> td(1, std::min<std::size_t>(3, n));
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  perm.resize(td(rng));
  return {std::move(dag), VertexSet(n, std::span<const Vertex>(perm))};
}

MixedGraph induced(const MixedGraph& g, const VertexSet& keep) { return induced_subgraph(g, keep).graph; }

}  // namespace

TEST(SkeletonStep, ChainOrders) {
  ci::OracleTester t(Dag(3, {{0, 1}, {1, 2}}));
  auto st = DiscoveryState::start(VertexSet::full(3));
  const auto s0 = skeleton_step(st, t, 0);
  EXPECT_TRUE(s0.had_candidates);
  EXPECT_EQ(s0.edges_removed, 0u);
  EXPECT_EQ(st.skeleton.n_edges(), 3u);
  const auto s1 = skeleton_step(st, t, 1);
  EXPECT_EQ(s1.edges_removed, 1u);
  EXPECT_FALSE(st.skeleton.adjacent(0, 2));
  EXPECT_EQ(st.sepsets.at(0, 2), (std::vector<Vertex>{1}));
  const auto s2 = skeleton_step(st, t, 2);
  EXPECT_FALSE(s2.had_candidates);
}

TEST(SkeletonStep, NeverRepeatsAQuery) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    auto inst = random_instance(rng, 9);
    const std::size_t n = inst.dag.n_vertices();
    ci::OracleTester raw(inst.dag), inner(inst.dag);
    ci::MemoizingTester memo(inner);
    auto a = DiscoveryState::start(VertexSet::full(n));
    auto b = DiscoveryState::start(VertexSet::full(n));
    for (std::size_t i = 0; i <= n; ++i) {
      skeleton_step(a, raw, i);
      skeleton_step(b, memo, i);
    }
    EXPECT_EQ(raw.counts(), inner.counts());
    EXPECT_EQ(raw.counts(), memo.counts());
    EXPECT_EQ(a.skeleton, b.skeleton);
    EXPECT_EQ(a.sepsets, b.sepsets);
  }
}

TEST(SkeletonStep, TwoCollidersOrderZero) {
  ci::OracleTester t(two_colliders());
  auto st = DiscoveryState::start(VertexSet::full(6));
  skeleton_step(st, t, 0);
  MixedGraph expected = MixedGraph::from_dag(two_colliders()).skeleton();
  expected.add_undirected(A, B);
  EXPECT_EQ(st.skeleton, expected);
  EXPECT_EQ(st.sepsets.at(U, B), std::vector<Vertex>{});
  EXPECT_EQ(st.sepsets.at(A, V), std::vector<Vertex>{});
  EXPECT_EQ(st.sepsets.at(C, D), std::vector<Vertex>{});
}

TEST(Orientation, TwoCollidersOrderZeroGivesBidirectedEdge) {
  ci::OracleTester t(two_colliders());
  auto st = DiscoveryState::start(VertexSet::full(6));
  skeleton_step(st, t, 0);
  const MixedGraph g = orient_vstructures_pc(st.skeleton, st.sepsets);
  EXPECT_EQ(g, two_colliders_order0_expected());
  EXPECT_EQ(prune_non_ancestors(g, VertexSet(6, {A})), VertexSet(6, {U, C, D, A}));
}

TEST(Orientation, MaskedColliderReplayPcGivesBidirectedEdge) {
  const Dag dag = masked_collider();
  ASSERT_TRUE(oracle::dsep_by_paths(dag, eX, eB, oracle::to_mask(8, {eG, eU, eV})));
  ASSERT_TRUE(oracle::dsep_by_paths(dag, eA, eG, oracle::to_mask(8, {eE, eC, eX})));
  ASSERT_TRUE(oracle::dsep_by_paths(dag, eA, eV, oracle::to_mask(8, {eG, eX})));
  ASSERT_TRUE(oracle::dsep_by_paths(dag, eA, eX, oracle::to_mask(8, {eG, eU, eV})));

  MixedGraph skeleton;
  SepsetMap sepsets;
  masked_collider_replay(skeleton, sepsets);
  EXPECT_EQ(orient_vstructures_pc(skeleton, sepsets), masked_collider_pc_expected());
}

TEST(Orientation, MaskedColliderReplayRfciRecoversTruePattern) {
  MixedGraph skeleton;
  SepsetMap sepsets;
  masked_collider_replay(skeleton, sepsets);
  ci::OracleTester t(masked_collider());
  const auto r = orient_vstructures_rfci(skeleton, sepsets, t);

  EXPECT_EQ(r.skeleton, MixedGraph::from_dag(masked_collider()).skeleton());
  EXPECT_EQ(r.stats.edges_deleted, 1u);
  ASSERT_TRUE(sepsets.contains_pair(eA, eX));
  EXPECT_TRUE(oracle::dsep_by_paths(masked_collider(), eA, eX, oracle::to_mask(8, sepsets.at(eA, eX))));

  EXPECT_EQ(r.oriented, masked_collider_rfci_expected());
  EXPECT_LE(r.stats.tests, r.stats.budget());
  EXPECT_EQ(t.counts().total, r.stats.tests);
}

TEST(Discovery, CounterExampleNeedsOneMoreTest) {
  const Dag dag = load_more_tests();
  const VertexSet targets(6, {index_of(dag, "X1"), index_of(dag, "X2")});
  ci::OracleTester t1(dag), t2(dag);
  const auto s = snap_inf(VertexSet::full(6), targets, t1);
  const auto p = pc(VertexSet::full(6), t2);
  EXPECT_EQ(s.remaining.size(), 6u);
  EXPECT_EQ(s.tests.total, p.tests.total + 1);
  EXPECT_EQ(t1.counts(), s.tests);
  EXPECT_EQ(t2.counts(), p.tests);
  EXPECT_EQ(s.lifted(), cpdag_of(dag));
  EXPECT_EQ(p.lifted(), cpdag_of(dag));
}

TEST(Discovery, ChainTargetAtSource) {
  const Dag dag(3, {{0, 1}, {1, 2}});
  ci::OracleTester t(dag);
  const auto r = snap_inf(VertexSet::full(3), VertexSet(3, {0}), t);
  // 0 - 1 - 2 is undirected in the CPDAG, so every vertex possibly causes 0.
  EXPECT_EQ(r.remaining, VertexSet::full(3));

  const Dag collider(3, {{0, 2}, {1, 2}});
  ci::OracleTester tc(collider);
  const auto rc = snap_inf(VertexSet::full(3), VertexSet(3, {0}), tc);
  EXPECT_EQ(rc.remaining, VertexSet(3, {0}));
  EXPECT_EQ(rc.graph.n_vertices(), 1u);
  EXPECT_EQ(rc.to_original, std::vector<Vertex>{0});
}

TEST(Discovery, AllTargetsGivesCpdag) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    const Dag dag = oracle::random_dag(7, 0.4, rng);
    ci::OracleTester t(dag);
    const auto r = snap_inf(VertexSet::full(7), VertexSet::full(7), t);
    EXPECT_EQ(r.lifted(), cpdag_of(dag));
  }
}

TEST(Discovery, CallerCountsMatchDistinctTests) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    auto inst = random_instance(rng, 8);
    ci::OracleTester t(inst.dag);
    const auto r = snap_inf(VertexSet::full(inst.dag.n_vertices()), inst.targets, t);
    EXPECT_EQ(t.counts(), r.tests);
    EXPECT_GE(r.queries, r.tests.total);
  }
}

TEST(Discovery, Deterministic) {
  const Dag dag = load_more_tests();
  ci::OracleTester t1(dag), t2(dag);
  const VertexSet targets(6, {0});
  const auto a = snap_inf(VertexSet::full(6), targets, t1);
  const auto b = snap_inf(VertexSet::full(6), targets, t2);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.sepsets, b.sepsets);
  EXPECT_EQ(a.tests, b.tests);
}

TEST(DiscoveryProperty, SoundCompleteAndPrefilterEquivalent) {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 60; ++rep) {
    auto inst = random_instance(rng, 7);
    const std::size_t n = inst.dag.n_vertices();
    const MixedGraph cpdag = cpdag_of(inst.dag);
    const VertexSet possan =
        from_mask(oracle::possible_ancestors_by_enumeration(inst.dag, oracle::to_mask(n, inst.targets.to_vector())));

    for (std::size_t k : {std::size_t{0}, std::size_t{1}, std::size_t{2}, n - 2}) {
      ci::OracleTester t(inst.dag);
      const auto r = snap_k(VertexSet::full(n), inst.targets, k, t);
      EXPECT_TRUE(possan.is_subset_of(r.remaining)) << "rep " << rep << " k " << k;
      EXPECT_EQ(possible_ancestors(cpdag, r.remaining), r.remaining) << "rep " << rep << " k " << k;
      for (const auto& call : r.rfci_calls) EXPECT_LE(call.tests, call.budget());
    }

    ci::OracleTester ts(inst.dag);
    const auto s = snap_inf(VertexSet::full(n), inst.targets, ts);
    EXPECT_EQ(s.remaining, possan) << "rep " << rep;
    EXPECT_EQ(s.graph, induced(cpdag, possan)) << "rep " << rep;

    ci::OracleTester tp(inst.dag);
    const auto f = snap_prefilter_then(GlobalAlgorithm::Pc, VertexSet::full(n), inst.targets, 0, tp);
    EXPECT_EQ(f.graph, induced(cpdag, f.remaining)) << "rep " << rep;

    ci::OracleTester tq(inst.dag);
    EXPECT_EQ(pc(VertexSet::full(n), tq).lifted(), cpdag) << "rep " << rep;
  }
}
