#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "snap/adjustment/adjustment.hpp"
#include "snap/error.hpp"
#include "snap/graph/edge_list.hpp"
#include "snap/synthetic/synthetic.hpp"

using namespace snap;
using namespace snap::adjustment;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::InvalidConfig;
}

VertexSet from_mask(const oracle::Mask& m) {
  const auto v = oracle::members(m);
  return VertexSet(m.size(), std::span<const Vertex>(v));
}

std::vector<double> random_weights(const Dag& dag, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.5, 1.5);
  std::bernoulli_distribution sign(0.5);
  std::vector<double> w;
  for (std::size_t i = 0; i < dag.n_edges(); ++i) w.push_back(sign(rng) ? mag(rng) : -mag(rng));
  return w;
}

std::vector<std::string> names(std::size_t n) { return synthetic::default_labels(n); }

// y = sum of columns * coefficients + unit noise, everything else iid N(0,1).
ci::Dataset linear_data(std::size_t n, std::uint64_t seed, const Dag& dag, const std::vector<double>& w) {
  synthetic::SemSpec spec{dag, w, std::vector<double>(dag.n_vertices(), 1.0)};
  return synthetic::sample_linear_gaussian(spec, n, seed);
}

// Regression oracle over the MEC: for each member, the population coefficient
// of x when adjusting for that member's parents of x, under one fixed
// covariance. Parents including y mean y causes x, i.e. effect 0.
std::vector<double> member_effects(const Dag& truth, const std::vector<double>& cov, Vertex x, Vertex y) {
  std::vector<double> out;
  for (const Dag& m : oracle::mec_members(truth)) {
    std::vector<Vertex> pa(m.parents(x).begin(), m.parents(x).end());
    if (std::find(pa.begin(), pa.end(), y) != pa.end()) {
      out.push_back(0.0);
      continue;
    }
    out.push_back(oracle::population_coefficient(cov, truth.n_vertices(), x, y, pa));
  }
  return out;
}

bool all_equal(const std::vector<double>& v, double tol) {
  for (double a : v)
    if (std::abs(a - v.front()) > tol) return false;
  return true;
}

}  // namespace

TEST(CausalNodes, Examples) {
  MixedGraph g(2);
  g.add_directed(0, 1);
  EXPECT_EQ(causal_nodes(g, 0, 1), VertexSet(2, {1}));
  EXPECT_EQ(forbidden_set(g, 0, 1), VertexSet(2, {1}));
  EXPECT_TRUE(causal_nodes(g, 1, 0).empty());
  EXPECT_TRUE(forbidden_set(g, 1, 0).empty());

  MixedGraph h(3);  // x=0, m=1, y=2
  h.add_directed(0, 1);
  h.add_directed(1, 2);
  h.add_directed(0, 2);
  EXPECT_EQ(causal_nodes(h, 0, 2), VertexSet(3, {1, 2}));

  MixedGraph f(4);  // x=0, m=1, y=2, w=3
  f.add_directed(0, 1);
  f.add_directed(1, 2);
  f.add_directed(1, 3);
  EXPECT_EQ(forbidden_set(f, 0, 2), VertexSet(4, {1, 2, 3}));

  // Undirected star x=0 - a=1, a - v=2, a - y=3: v is only reachable by
  // passing a twice, and vertices past y do not count.
  MixedGraph s(4);
  s.add_undirected(0, 1);
  s.add_undirected(1, 2);
  s.add_undirected(1, 3);
  EXPECT_EQ(causal_nodes(s, 0, 3), VertexSet(4, {1, 3}));
  MixedGraph p(3);  // x=0 -> y=1 - w=2
  p.add_directed(0, 1);
  p.add_undirected(1, 2);
  EXPECT_EQ(causal_nodes(p, 0, 1), VertexSet(3, {1}));
}

TEST(Amenability, Examples) {
  MixedGraph g(2);
  g.add_directed(0, 1);
  EXPECT_TRUE(is_amenable(g, 0, 1));
  g.add_undirected(0, 1);
  EXPECT_FALSE(is_amenable(g, 0, 1));

  MixedGraph h(4);  // x=0, m=1, y=2, w=3: x->m-y, x-w->y
  h.add_directed(0, 1);
  h.add_undirected(1, 2);
  h.add_undirected(0, 3);
  h.add_directed(3, 2);
  EXPECT_FALSE(is_amenable(h, 0, 2));
}

TEST(AdjustmentSets, Examples) {
  MixedGraph g(3);  // z=0, x=1, y=2
  g.add_directed(0, 1);
  g.add_directed(0, 2);
  g.add_directed(1, 2);
  EXPECT_EQ(canonical_adjustment(g, 1, 2), VertexSet(3, {0}));
  EXPECT_EQ(optimal_adjustment(g, 1, 2), VertexSet(3, {0}));
  EXPECT_EQ(parent_adjustment(g, 1), VertexSet(3, {0}));

  MixedGraph pair(2);
  pair.add_directed(0, 1);
  EXPECT_TRUE(canonical_adjustment(pair, 0, 1).empty());
  EXPECT_TRUE(optimal_adjustment(pair, 0, 1).empty());
  EXPECT_TRUE(parent_adjustment(pair, 0).empty());

  MixedGraph m(4);  // x=0, m=1, y=2, z=3
  m.add_directed(0, 1);
  m.add_directed(1, 2);
  m.add_directed(3, 1);
  EXPECT_EQ(optimal_adjustment(m, 0, 2), VertexSet(4, {3}));

  MixedGraph u(2);
  u.add_undirected(0, 1);
  EXPECT_EQ(code_of([&] { canonical_adjustment(u, 0, 1); }), Errc::NotIdentifiable);
  EXPECT_EQ(code_of([&] { optimal_adjustment(u, 0, 1); }), Errc::NotIdentifiable);
  EXPECT_EQ(code_of([&] { parent_adjustment(u, 0); }), Errc::UndirectedIncidence);
}

TEST(AdjustmentProperty, GraphFunctionsMatchEnumeration) {
  std::mt19937_64 rng(17);
  std::size_t amenable = 0, not_amenable = 0;
  for (int rep = 0; rep < 150; ++rep) {
    std::uniform_int_distribution<std::size_t> nd(2, 6);
    const std::size_t n = nd(rng);
    const Dag dag = oracle::random_dag(n, 0.5, rng);
    const MixedGraph g = cpdag_of(dag);
    const auto members = oracle::mec_members(dag);
    const auto cov = oracle::sem_covariance(dag, random_weights(dag, rng));

    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (x == y) continue;
        const VertexSet cn = from_mask(oracle::causal_nodes_by_paths(g, x, y));
        ASSERT_EQ(causal_nodes(g, x, y), cn) << rep << ": " << x << "," << y << "\n" << [&] {
          std::ostringstream os;
          write_edge_list(os, g);
          return os.str();
        }();
        const VertexSet forb = from_mask(oracle::possible_descendants_by_enumeration(dag, oracle::to_mask(n, cn.to_vector())));
        EXPECT_EQ(forbidden_set(g, x, y), forb);

        const bool am = is_amenable(g, x, y);
        EXPECT_EQ(am, !oracle::has_undirected_start_path(g, x, y));
        const bool agree = all_equal(member_effects(dag, cov, x, y), 1e-8);
        EXPECT_EQ(am, agree) << rep << ": " << x << "," << y;
        (am ? amenable : not_amenable)++;
        if (!am) continue;

        const VertexSet xy(n, {x, y});
        VertexSet canonical =
            from_mask(oracle::possible_ancestors_by_enumeration(dag, oracle::to_mask(n, xy.to_vector())));
        canonical -= forb;
        canonical -= xy;
        EXPECT_EQ(canonical_adjustment(g, x, y), canonical);

        VertexSet pa_cn(n);
        for (Vertex c : cn)
          for (Vertex p = 0; p < n; ++p) {
            const bool definite = std::all_of(members.begin(), members.end(),
                                              [&](const Dag& m) { return m.has_edge(p, c); });
            if (definite) pa_cn.insert(p);
          }
        VertexSet optimal = pa_cn - forb;
        optimal.erase(x);
        EXPECT_EQ(optimal_adjustment(g, x, y), optimal);

        // Both sets adjust correctly at the population level. Without a
        // causal path the effect is 0 by definition and no set is needed.
        if (cn.empty()) continue;
        const auto truth = member_effects(dag, cov, x, y).front();
        EXPECT_NEAR(oracle::population_coefficient(cov, n, x, y, optimal.to_vector()), truth, 1e-8);
        EXPECT_NEAR(oracle::population_coefficient(cov, n, x, y, canonical.to_vector()), truth, 1e-8);
      }
  }
  EXPECT_GT(amenable, 100u);
  EXPECT_GT(not_amenable, 20u);
}

TEST(Ols, Examples) {
  const Dag xy(2, {{0, 1}});
  const auto d1 = linear_data(10000, 1, xy, {3.0});
  EXPECT_NEAR(estimate_effect_ols(d1, 0, 1, std::span<const Vertex>{}), 3.0, 0.05);

  const Dag empty(2, {});
  const auto d2 = linear_data(10000, 2, empty, {});
  EXPECT_NEAR(estimate_effect_ols(d2, 0, 1, std::span<const Vertex>{}), 0.0, 0.05);

  const Dag conf(3, {{0, 1}, {0, 2}});  // z=0 -> x=1, z -> y=2
  const auto d3 = linear_data(10000, 3, conf, {1.5, -2.0});
  EXPECT_NEAR(estimate_effect_ols(d3, 1, 2, VertexSet(3, {0})), 0.0, 0.05);
  EXPECT_GT(std::abs(estimate_effect_ols(d3, 1, 2, VertexSet(3))), 0.5);
}

TEST(Ols, Errors) {
  const Dag xy(3, {{0, 1}});
  const auto tiny = linear_data(3, 1, xy, {1.0});
  EXPECT_EQ(code_of([&] { estimate_effect_ols(tiny, 0, 1, VertexSet(3, {2})); }), Errc::SingularDesign);
  std::vector<std::vector<double>> cols{{1, 2, 3, 4, 5}, {2, 1, 4, 3, 5}, {2, 4, 6, 8, 10}};
  const auto dup = ci::Dataset::continuous(names(3), cols);
  EXPECT_EQ(code_of([&] { estimate_effect_ols(dup, 0, 1, VertexSet(3, {2})); }), Errc::SingularDesign);
  EXPECT_EQ(code_of([&] { estimate_effect_ols(dup, 1, 1, VertexSet(3)); }), Errc::InvalidQuery);
}

TEST(LocalEffects, Examples) {
  // Fully directed: z=0 -> x=1 -> y=2, z -> y.
  const Dag d(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto data = linear_data(5000, 4, d, {1.0, 1.0, 2.0});
  MixedGraph g(3);
  g.add_directed(0, 1);
  g.add_directed(0, 2);
  g.add_directed(1, 2);
  const auto v = possible_effects_local(data, g, 1, 2);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_DOUBLE_EQ(v[0], estimate_effect_ols(data, 1, 2, VertexSet(3, {0})));

  // x=0 - z=1 with y=2 elsewhere: candidate parent sets {} and {z}.
  MixedGraph h(3);
  h.add_undirected(0, 1);
  const auto hd = linear_data(2000, 5, Dag(3, {{0, 1}}), {1.0});
  EXPECT_LE(possible_effects_local(hd, h, 0, 2).size(), 2u);

  // y undirected-adjacent to x.
  MixedGraph u(2);
  u.add_undirected(0, 1);
  const auto ud = linear_data(2000, 6, Dag(2, {{0, 1}}), {2.0});
  const auto uv = possible_effects_local(ud, u, 0, 1);
  EXPECT_TRUE(std::find(uv.begin(), uv.end(), 0.0) != uv.end());
  EXPECT_EQ(uv.size(), 2u);
  EXPECT_NEAR(uv.back(), 2.0, 0.1);
}

TEST(EstimateEffect, RoutesByAmenability) {
  const Dag d(3, {{0, 1}, {1, 2}});
  const auto data = linear_data(5000, 7, d, {1.0, 1.0});
  MixedGraph directed = MixedGraph::from_dag(d);
  const auto e = estimate_effect(data, directed, 0, 2);
  EXPECT_TRUE(e.identifiable);
  ASSERT_EQ(e.values.size(), 1u);
  EXPECT_NEAR(e.values[0], 1.0, 0.1);

  const auto back = estimate_effect(data, directed, 2, 0);
  EXPECT_TRUE(back.identifiable);
  EXPECT_EQ(back.values, std::vector<double>{0.0});

  const MixedGraph und = directed.skeleton();
  const auto ne = estimate_effect(data, und, 0, 2);
  EXPECT_FALSE(ne.identifiable);
  EXPECT_GE(ne.values.size(), 2u);
}

TEST(TrueEffect, Examples) {
  const Dag a(2, {{0, 1}});
  const std::vector<double> w{2.0};
  EXPECT_DOUBLE_EQ(true_total_effect(a, w, 0, 1), 2.0);
  EXPECT_DOUBLE_EQ(true_total_effect(a, w, 1, 0), 0.0);
  const Dag b(3, {{0, 1}, {0, 2}, {1, 2}});  // edges sorted: 0->1, 0->2, 1->2
  const std::vector<double> wb{2.0, 1.0, 3.0};
  EXPECT_DOUBLE_EQ(true_total_effect(b, wb, 0, 2), 7.0);

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const Dag dag = oracle::random_dag(7, 0.4, rng);
    const auto ww = random_weights(dag, rng);
    for (Vertex x = 0; x < 7; ++x)
      for (Vertex y = 0; y < 7; ++y)
        if (x != y) EXPECT_NEAR(true_total_effect(dag, ww, x, y), oracle::total_effect_by_paths(dag, ww, x, y), 1e-9);
  }
}

TEST(InterventionDistance, Examples) {
  const VertexSet t(2, {0, 1});
  PairMap truth{{{0, 1}, 1.0}, {{1, 0}, 0.0}};
  EstimateMap exact{{{0, 1}, {{1.0}, true, {}}}, {{1, 0}, {{0.0}, true, {}}}};
  EXPECT_DOUBLE_EQ(intervention_distance(truth, exact, t), 0.0);
  EstimateMap zero{{{0, 1}, {{0.0}, true, {}}}, {{1, 0}, {{0.0}, true, {}}}};
  EXPECT_DOUBLE_EQ(intervention_distance(truth, zero, t), 0.5);
  EstimateMap spread{{{0, 1}, {{0.0, 2.0}, false, {}}}, {{1, 0}, {{0.0}, true, {}}}};
  EXPECT_DOUBLE_EQ(intervention_distance(truth, spread, t), 0.5);
  EstimateMap missing{{{0, 1}, {{1.0}, true, {}}}};
  EXPECT_EQ(code_of([&] { intervention_distance(truth, missing, t); }), Errc::MissingPair);
}

TEST(InterventionDistance, Properties) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    PairMap truth;
    EstimateMap est, swapped_est;
    PairMap swapped_truth;
    // Relabel 0 <-> 2 to check permutation symmetry.
    auto relabel = [](Vertex v) -> Vertex { return v == 0 ? 2 : v == 2 ? 0 : v; };
    for (Vertex a = 0; a < 3; ++a)
      for (Vertex b = 0; b < 3; ++b) {
        if (a == b) continue;
        const double th = nd(rng);
        EffectEstimate e{{nd(rng), nd(rng)}, false, {}};
        std::sort(e.values.begin(), e.values.end());
        truth[{a, b}] = th;
        est[{a, b}] = e;
        swapped_truth[{relabel(a), relabel(b)}] = th;
        swapped_est[{relabel(a), relabel(b)}] = e;
      }
    const VertexSet t = VertexSet::full(3);
    const double d = intervention_distance(truth, est, t);
    EXPECT_GT(d, 0.0);
    EXPECT_NEAR(d, intervention_distance(swapped_truth, swapped_est, t), 1e-12);
  }
}

TEST(EffectReport, Format) {
  EstimateMap m;
  m[{0, 1}] = {{0.5}, true, {{2}}};
  m[{1, 0}] = {{0.0, 1.0}, false, {{}, {0, 2}}};
  std::ostringstream out;
  write_effect_report(out, m, {"A", "B", "C"});
  EXPECT_EQ(out.str(),
            "cause,outcome,identifiable,n_estimates,mean_estimate,adjustment_set\n"
            "A,B,true,1,0.5,C\n"
            "B,A,false,2,0.5,|A;C\n");
}

TEST(AdjustmentProperty, OptimalSetRecoversTotalEffect) {
  std::mt19937_64 rng(31);
  int checked = 0;
  int attempts = 0;
  while (checked < 100 && attempts < 5000) {
    ++attempts;
    std::uniform_int_distribution<std::size_t> nd(3, 8);
    const std::size_t n = nd(rng);
    const Dag dag = oracle::random_dag(n, 2.0 / static_cast<double>(n - 1), rng);
    const MixedGraph g = cpdag_of(dag);
    std::uniform_int_distribution<Vertex> vd(0, n - 1);
    const Vertex x = vd(rng), y = vd(rng);
    if (x == y || !is_amenable(g, x, y)) continue;
    const auto w = random_weights(dag, rng);
    const auto data = linear_data(50000, 100 + checked, dag, w);
    const double truth = oracle::total_effect_by_paths(dag, w, x, y);
    const auto e = estimate_effect(data, g, x, y);
    ASSERT_TRUE(e.identifiable);
    EXPECT_NEAR(e.values[0], truth, 0.05) << "instance " << checked;
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(AdjustmentProperty, OptimalSetBeatsParentsOnVariance) {
  std::mt19937_64 rng(77);
  int instances = 0, better = 0, attempts = 0;
  while (instances < 100 && attempts < 200000) {
    ++attempts;
    std::uniform_int_distribution<std::size_t> nd(4, 8);
    const std::size_t n = nd(rng);
    const Dag dag = oracle::random_dag(n, 2.5 / static_cast<double>(n - 1), rng);
    const MixedGraph g = cpdag_of(dag);
    std::uniform_int_distribution<Vertex> vd(0, n - 1);
    const Vertex x = vd(rng), y = vd(rng);
    if (x == y || !g.undirected_neighbors(x).empty() || !is_amenable(g, x, y)) continue;
    if (causal_nodes(g, x, y).empty()) continue;
    const VertexSet opt = optimal_adjustment(g, x, y);
    const VertexSet par = parent_adjustment(g, x);
    if (opt.empty() || par.empty() || opt == par) continue;

    const auto w = random_weights(dag, rng);
    double mo = 0, so = 0, mp = 0, sp = 0;
    const int reps = 200;
    for (int r = 0; r < reps; ++r) {
      const auto data = linear_data(1000, 7919ull * static_cast<std::uint64_t>(instances) + r, dag, w);
      const double a = estimate_effect_ols(data, x, y, opt);
      const double b = estimate_effect_ols(data, x, y, par);
      mo += a;
      so += a * a;
      mp += b;
      sp += b * b;
    }
    const double vo = so / reps - (mo / reps) * (mo / reps);
    const double vp = sp / reps - (mp / reps) * (mp / reps);
    better += vo <= vp ? 1 : 0;
    ++instances;
  }
  ASSERT_EQ(instances, 100);
  EXPECT_GE(better, 80);
}
