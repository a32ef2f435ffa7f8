#include "snap/graph/mixed_graph.hpp"

namespace snap {

namespace {

// R1: x -> z -- y, x and y non-adjacent  =>  z -> y
bool rule1(const MixedGraph& g, Vertex z, Vertex y) {
  for (Vertex x : g.neighbors(z))
    if (x != y && g.is_directed(x, z) && !g.adjacent(x, y)) return true;
  return false;
}

// R2: x -> z -> y and x -- y  =>  x -> y
bool rule2(const MixedGraph& g, Vertex x, Vertex y) {
  for (Vertex z : g.neighbors(x))
    if (z != y && g.is_directed(x, z) && g.is_directed(z, y)) return true;
  return false;
}

// R3: x -> z <- y, x -- v -- y, v -- z, x and y non-adjacent  =>  v -> z
bool rule3(const MixedGraph& g, Vertex v, Vertex z) {
  std::vector<Vertex> candidates;
  for (Vertex x : g.neighbors(z))
    if (x != v && g.is_directed(x, z) && g.is_undirected(v, x)) candidates.push_back(x);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (!g.adjacent(candidates[i], candidates[j])) return true;
  return false;
}

}  // namespace

MixedGraph meek_closure(MixedGraph g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : g.adjacent_pairs()) {
      if (!g.is_undirected(a, b)) continue;
      for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
        if (rule1(g, from, to) || rule2(g, from, to) || rule3(g, from, to)) {
          g.orient(from, to);
          changed = true;
          break;
        }
      }
    }
  }
  return g;
}

}  // namespace snap
