#include <algorithm>
#include <map>

#include "snap/discovery/discovery.hpp"
#include "snap/error.hpp"

namespace snap::discovery {

DiscoveryState DiscoveryState::start(const VertexSet& vertices) {
  DiscoveryState st;
  st.remaining = vertices;
  st.skeleton = MixedGraph(vertices.universe());
  const auto members = vertices.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) st.skeleton.add_undirected(members[i], members[j]);
  st.oriented = st.skeleton;
  return st;
}

void DiscoveryState::restrict_to_remaining() {
  for (auto [u, v] : skeleton.adjacent_pairs())
    if (!remaining.contains(u) || !remaining.contains(v)) skeleton.remove_edge(u, v);
  for (auto [u, v] : oriented.adjacent_pairs())
    if (!remaining.contains(u) || !remaining.contains(v)) oriented.remove_edge(u, v);
}

SkeletonStepStats skeleton_step(DiscoveryState& state, ci::CITester& tester, std::size_t order) {
  if (state.skeleton.n_vertices() != tester.n_vertices()) {
    throw Error(Errc::SizeMismatch, "skeleton and tester disagree on the vertex count");
  }
  state.order = order;
  SkeletonStepStats stats;
  std::vector<Vertex> others;
  std::vector<std::size_t> pick(order);
  std::vector<Vertex> cond(order);
  // Adjacencies x had when it tested the pair x - y and kept the edge: every
  // subset of them is already known to leave x and y dependent.
  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> kept;
  std::vector<bool> known(state.skeleton.n_vertices(), false);

  for (Vertex x : state.remaining) {
    const auto snapshot = state.skeleton.neighbors(x);
    const std::vector<Vertex> ys(snapshot.begin(), snapshot.end());
    for (Vertex y : ys) {
      if (!state.skeleton.adjacent(x, y)) continue;
      others.clear();
      for (Vertex w : state.skeleton.neighbors(x))
        if (w != y) others.push_back(w);
      if (others.size() < order) continue;
      stats.had_candidates = true;

      const auto prior = kept.find({y, x});
      if (prior != kept.end())
        for (Vertex w : prior->second) known[w] = true;
      bool removed = false;
      // Lexicographic walk over the order-sized subsets of `others`.
      for (std::size_t i = 0; i < order; ++i) pick[i] = i;
      while (true) {
        bool seen = prior != kept.end();
        for (std::size_t i = 0; i < order; ++i) {
          cond[i] = others[pick[i]];
          seen = seen && known[cond[i]];
        }
        if (!seen && tester.independent(x, y, cond)) {
          state.skeleton.remove_edge(x, y);
          state.sepsets.set(x, y, cond);
          ++stats.edges_removed;
          removed = true;
          break;
        }
        std::size_t i = order;
        while (i > 0 && pick[i - 1] == others.size() - order + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < order; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (prior != kept.end())
        for (Vertex w : prior->second) known[w] = false;
      if (!removed) kept.emplace(std::make_pair(x, y), others);
    }
  }
  return stats;
}

}  // namespace snap::discovery
