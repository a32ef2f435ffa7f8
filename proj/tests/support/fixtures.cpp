#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"

namespace fixtures {

Dag two_colliders() { return Dag(6, {{U, A}, {C, A}, {D, A}, {C, B}, {D, B}, {V, B}}, {"A", "B", "C", "D", "U", "V"}); }

MixedGraph two_colliders_order0_expected() {
  MixedGraph g(6);
  for (Vertex p : {U, C, D}) g.add_directed(p, A);
  for (Vertex p : {C, D, V}) g.add_directed(p, B);
  g.add_bidirected(A, B);
  return g;
}

Dag masked_collider() {
  return Dag(8,
             {{eX, eU}, {eU, eA}, {eG, eX}, {eG, eE}, {eG, eC}, {eE, eA}, {eC, eA}, {eA, eB}, {eV, eB}, {eV, eX}},
             {"A", "B", "C", "E", "G", "U", "V", "X"});
}

void masked_collider_replay(MixedGraph& skeleton, SepsetMap& sepsets) {
  const Dag dag = masked_collider();
  skeleton = MixedGraph::from_dag(dag).skeleton();
  skeleton.add_undirected(eA, eX);
  sepsets = SepsetMap{};
  for (Vertex x = 0; x < 8; ++x)
    for (Vertex y = x + 1; y < 8; ++y)
      if (!skeleton.adjacent(x, y)) sepsets.set(x, y, smallest_sepset(dag, x, y));
  const std::vector<Vertex> xb{eG, eU, eV}, ag{eE, eC, eX}, av{eG, eX};
  sepsets.set(eX, eB, xb);
  sepsets.set(eA, eG, ag);
  sepsets.set(eA, eV, av);
}

namespace {

MixedGraph masked_collider_common() {
  MixedGraph g(8);
  for (Vertex p : {eU, eE, eC}) g.add_directed(p, eA);
  g.add_directed(eV, eB);
  g.add_directed(eG, eX);
  g.add_directed(eV, eX);
  g.add_undirected(eX, eU);
  g.add_undirected(eG, eE);
  g.add_undirected(eG, eC);
  return g;
}

}  // namespace

MixedGraph masked_collider_pc_expected() {
  MixedGraph g = masked_collider_common();
  g.add_directed(eX, eA);
  g.add_bidirected(eA, eB);
  return g;
}

MixedGraph masked_collider_rfci_expected() {
  MixedGraph g = masked_collider_common();
  g.add_directed(eA, eB);
  return g;
}

std::vector<Vertex> smallest_sepset(const Dag& dag, Vertex x, Vertex y) {
  std::vector<Vertex> others;
  for (Vertex v = 0; v < dag.n_vertices(); ++v)
    if (v != x && v != y) others.push_back(v);
  const std::size_t m = others.size();
  for (std::size_t size = 0; size <= m; ++size) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < m; ++i)
        if (pick[i]) s.push_back(others[i]);
      if (oracle::dsep_by_paths(dag, x, y, oracle::to_mask(dag.n_vertices(), s))) return s;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw std::logic_error("adjacent pair has no separating set");
}

}  // namespace fixtures
