#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <tuple>

#include "snap/discovery/discovery.hpp"
#include "snap/error.hpp"

namespace snap::discovery {

namespace {

/// Unshielded triple x - z - y, stored with x < y.
struct Triple {
  Vertex x;
  Vertex z;
  Vertex y;

  friend auto operator<=>(const Triple&, const Triple&) = default;

  bool uses_edge(Vertex a, Vertex b) const {
    auto same = [&](Vertex p, Vertex q) { return (p == a && q == b) || (p == b && q == a); };
    return same(x, z) || same(z, y);
  }
};

std::vector<Triple> unshielded_triples(const MixedGraph& g) {
  std::vector<Triple> out;
  for (Vertex z = 0; z < g.n_vertices(); ++z) {
    auto nb = g.neighbors(z);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j])) out.push_back({nb[i], z, nb[j]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void orient_collider(MixedGraph& g, const Triple& t) {
  g.put_arrowhead(t.x, t.z);
  g.put_arrowhead(t.y, t.z);
}

}  // namespace

MixedGraph orient_vstructures_pc(const MixedGraph& skeleton, const SepsetMap& sepsets) {
  MixedGraph g = skeleton.skeleton();
  g.set_labels(skeleton.labels());
  for (const auto& t : unshielded_triples(skeleton)) {
    if (!contains(sepsets.at(t.x, t.y), t.z)) orient_collider(g, t);
  }
  return g;
}

RfciOrientation orient_vstructures_rfci(const MixedGraph& skeleton, SepsetMap& sepsets,
                                        ci::CITester& tester) {
  const auto tests_before = tester.counts().total;
  RfciOrientation out;
  MixedGraph& u = out.skeleton;
  u = skeleton.skeleton();
  u.set_labels(skeleton.labels());

  std::deque<Triple> pending;
  std::set<Triple> queued;
  for (const auto& t : unshielded_triples(u)) {
    pending.push_back(t);
    queued.insert(t);
  }
  std::vector<Triple> legitimate;

  while (!pending.empty()) {
    const Triple t = pending.front();
    pending.pop_front();
    queued.erase(t);
    if (!u.adjacent(t.x, t.z) || !u.adjacent(t.z, t.y) || u.adjacent(t.x, t.y)) continue;

    const std::vector<Vertex> sep = sepsets.at(t.x, t.y);
    if (contains(sep, t.z)) continue;
    ++out.stats.triples_processed;

    // Each endpoint is tested at most once per triple; the answers are reused
    // by the edge-removal branch.
    std::optional<bool> x_indep = tester.independent(t.x, t.z, sep);
    std::optional<bool> y_indep;
    if (!*x_indep) y_indep = tester.independent(t.z, t.y, sep);
    if (!*x_indep && !*y_indep) {
      legitimate.push_back(t);
      continue;
    }

    for (Vertex v : {t.x, t.y}) {
      bool indep;
      if (v == t.x) {
        indep = *x_indep;
      } else {
        if (!y_indep) y_indep = tester.independent(t.y, t.z, sep);
        indep = *y_indep;
      }
      if (!indep) continue;

      // Greedy minimisation: drop single elements while independence holds.
      out.stats.max_sepset = std::max(out.stats.max_sepset, sep.size());
      std::vector<Vertex> minimal = sep;
      bool done = false;
      while (!done) {
        done = true;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
          std::vector<Vertex> smaller = minimal;
          smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
          if (tester.independent(v, t.z, smaller)) {
            minimal = std::move(smaller);
            done = false;
            break;
          }
        }
      }
      sepsets.set(v, t.z, minimal);

      const Vertex a = std::min(v, t.z);
      const Vertex b = std::max(v, t.z);
      for (Vertex w : u.neighbors(a)) {
        if (w == b || !u.adjacent(w, b)) continue;
        const Triple fresh{a, w, b};
        if (queued.insert(fresh).second) pending.push_back(fresh);
      }
      auto stale = [&](const Triple& tr) { return tr.uses_edge(v, t.z); };
      for (auto it = pending.begin(); it != pending.end();) {
        if (stale(*it)) {
          queued.erase(*it);
          it = pending.erase(it);
        } else {
          ++it;
        }
      }
      std::erase_if(legitimate, stale);
      u.remove_edge(v, t.z);
      ++out.stats.edges_deleted;
    }
  }

  out.oriented = u;
  for (const auto& t : legitimate) orient_collider(out.oriented, t);
  out.stats.tests = tester.counts().total - tests_before;
  return out;
}

VertexSet prune_non_ancestors(const MixedGraph& g, const VertexSet& targets) {
  return possible_ancestors(g, targets);
}

}  // namespace snap::discovery
