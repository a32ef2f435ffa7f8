#include "snap/adjustment/adjustment.hpp"

#include <string>

#include "snap/error.hpp"

namespace snap::adjustment {

namespace {

void check_pair(const MixedGraph& g, Vertex x, Vertex y) {
  if (x >= g.n_vertices() || y >= g.n_vertices()) {
    throw Error(Errc::IndexOutOfRange, "query vertex outside the graph");
  }
  if (x == y) throw Error(Errc::InvalidQuery, "cause and outcome coincide");
}

bool possibly_directed(const MixedGraph& g, Vertex from, Vertex to) {
  const auto k = g.kind(from, to);
  return k == EdgeKind::Undirected || k == EdgeKind::Forward;
}

/// Vertices reachable from `start` along possibly directed edges (reversed
/// when `backwards`) without ever entering `blocked`.
VertexSet reach_avoiding(const MixedGraph& g, std::span<const Vertex> start, Vertex blocked,
                         bool backwards) {
  VertexSet seen(g.n_vertices());
  std::vector<Vertex> stack;
  for (Vertex s : start) {
    if (s != blocked && !seen.contains(s)) {
      seen.insert(s);
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (u == blocked || seen.contains(u)) continue;
      if (backwards ? possibly_directed(g, u, v) : possibly_directed(g, v, u)) {
        seen.insert(u);
        stack.push_back(u);
      }
    }
  }
  return seen;
}

/// Unit-capacity max flow with vertex splitting, used to decide whether some
/// simple undirected path inside one component runs from `entries` through
/// `v` to `exits`.
class PathThroughVertex {
 public:
  explicit PathThroughVertex(std::size_t nodes) : adj_(nodes) {}

  void arc(std::size_t from, std::size_t to) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, 1});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  /// Augments at most `limit` times and returns the flow found.
  int max_flow(std::size_t source, std::size_t sink, int limit) {
    int flow = 0;
    while (flow < limit) {
      std::vector<std::size_t> via(adj_.size(), kNone);
      std::vector<std::size_t> queue{source};
      via[source] = kNone - 1;
      for (std::size_t head = 0; head < queue.size() && via[sink] == kNone; ++head) {
        for (std::size_t a : adj_[queue[head]]) {
          if (arcs_[a].cap > 0 && via[arcs_[a].to] == kNone) {
            via[arcs_[a].to] = a;
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (via[sink] == kNone) break;
      for (std::size_t at = sink; at != source;) {
        const std::size_t a = via[at];
        --arcs_[a].cap;
        ++arcs_[a ^ 1].cap;
        at = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

bool on_simple_segment(const MixedGraph& g, const std::vector<Vertex>& component, Vertex v,
                       const VertexSet& entries, const VertexSet& exits) {
  if (entries.empty() || exits.empty()) return false;
  if (entries.contains(v) && exits.contains(v)) return true;
  if (entries.contains(v) || exits.contains(v)) {
    // v starts (or ends) the segment; only the other half is needed.
    const VertexSet& goal = entries.contains(v) ? exits : entries;
    VertexSet seen(g.n_vertices(), {v});
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      const Vertex w = stack.back();
      stack.pop_back();
      if (goal.contains(w)) return true;
      for (Vertex u : g.undirected_neighbors(w)) {
        if (!seen.contains(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
      }
    }
    return false;
  }
  const std::size_t m = component.size();
  std::vector<std::size_t> local(g.n_vertices(), m);
  for (std::size_t i = 0; i < m; ++i) local[component[i]] = i;

  // Node 2i is the entry side of component[i], 2i+1 its exit side.
  const std::size_t alpha = 2 * m, beta = 2 * m + 1, sink = 2 * m + 2;
  PathThroughVertex net(2 * m + 3);
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex w = component[i];
    if (w != v) net.arc(2 * i, 2 * i + 1);
    for (Vertex u : g.undirected_neighbors(w))
      if (local[u] < m) net.arc(2 * i + 1, 2 * local[u]);
    if (entries.contains(w)) net.arc(2 * i + 1, alpha);
    if (exits.contains(w)) net.arc(2 * i + 1, beta);
  }
  net.arc(alpha, sink);
  net.arc(beta, sink);
  const std::size_t source = 2 * local[v] + 1;
  return net.max_flow(source, sink, 2) == 2;
}

}  // namespace

// Possibly directed paths cannot return to a chain component they left, so a
// proper path from x to y is a chain of simple undirected segments joined by
// directed edges. v is a causal node iff some segment through v's component
// can enter where x's forward reach arrives and leave towards y.
VertexSet causal_nodes(const MixedGraph& g, Vertex x, Vertex y) {
  check_pair(g, x, y);
  const std::size_t n = g.n_vertices();
  const Vertex from_x[] = {x};
  const Vertex to_y[] = {y};
  const VertexSet forward = reach_avoiding(g, from_x, y, false);
  const VertexSet backward = reach_avoiding(g, to_y, x, true);
  VertexSet out(n);

  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<Vertex>> components;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    components.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = components.size() - 1;
    while (!stack.empty()) {
      const Vertex w = stack.back();
      stack.pop_back();
      components.back().push_back(w);
      for (Vertex u : g.undirected_neighbors(w)) {
        if (comp[u] == n) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
      }
    }
  }

  for (const auto& component : components) {
    const std::size_t c = comp[component.front()];
    VertexSet entries(n), exits(n);
    for (Vertex w : component) {
      if (w == x) {
        entries.insert(w);
      } else if (comp[x] != c) {
        for (Vertex u : g.neighbors(w))
          if (forward.contains(u) && g.is_directed(u, w)) entries.insert(w);
      }
      if (w == y) {
        exits.insert(w);
      } else if (comp[y] != c) {
        for (Vertex u : g.neighbors(w))
          if (backward.contains(u) && g.is_directed(w, u)) exits.insert(w);
      }
    }
    for (Vertex v : component)
      if (v != x && on_simple_segment(g, component, v, entries, exits)) out.insert(v);
  }
  return out;
}

VertexSet forbidden_set(const MixedGraph& g, Vertex x, Vertex y) {
  return possible_descendants(g, causal_nodes(g, x, y));
}

bool is_amenable(const MixedGraph& g, Vertex x, Vertex y) {
  check_pair(g, x, y);
  const Vertex target[] = {y};
  const VertexSet reaches_y = reach_avoiding(g, target, x, true);
  for (Vertex u : g.undirected_neighbors(x))
    if (reaches_y.contains(u)) return false;
  return true;
}

VertexSet canonical_adjustment(const MixedGraph& g, Vertex x, Vertex y) {
  if (!is_amenable(g, x, y)) throw Error(Errc::NotIdentifiable, "effect is not identifiable by adjustment");
  VertexSet out = possible_ancestors(g, VertexSet(g.n_vertices(), {x, y}));
  out -= forbidden_set(g, x, y);
  out.erase(x);
  out.erase(y);
  return out;
}

VertexSet optimal_adjustment(const MixedGraph& g, Vertex x, Vertex y) {
  if (!is_amenable(g, x, y)) throw Error(Errc::NotIdentifiable, "effect is not identifiable by adjustment");
  const VertexSet cn = causal_nodes(g, x, y);
  VertexSet out(g.n_vertices());
  for (Vertex c : cn)
    for (Vertex p : g.parents(c)) out.insert(p);
  out -= possible_descendants(g, cn);
  out.erase(x);
  return out;
}

VertexSet parent_adjustment(const MixedGraph& g, Vertex x) {
  if (x >= g.n_vertices()) throw Error(Errc::IndexOutOfRange, "vertex outside the graph");
  if (!g.undirected_neighbors(x).empty()) {
    throw Error(Errc::UndirectedIncidence,
                "vertex " + g.label(x) + " has undirected neighbours; its parents are ambiguous");
  }
  const auto pa = g.parents(x);
  return VertexSet(g.n_vertices(), std::span<const Vertex>(pa));
}

double true_total_effect(const Dag& dag, std::span<const double> weights, Vertex x, Vertex y) {
  if (weights.size() != dag.n_edges()) throw Error(Errc::SizeMismatch, "one weight per edge required");
  if (x >= dag.n_vertices() || y >= dag.n_vertices()) {
    throw Error(Errc::IndexOutOfRange, "query vertex outside the graph");
  }
  if (x == y) throw Error(Errc::InvalidQuery, "cause and outcome coincide");
  // Path sums in topological order: effect[v] = sum over parents p of w(p, v) * effect[p].
  std::vector<double> effect(dag.n_vertices(), 0.0);
  effect[x] = 1.0;
  const auto& edges = dag.edges();
  for (Vertex v : dag.topological_order()) {
    if (v == x) continue;
    double total = 0.0;
    for (Vertex p : dag.parents(v)) {
      if (effect[p] == 0.0) continue;
      const auto it = std::lower_bound(edges.begin(), edges.end(), Edge{p, v});
      total += weights[static_cast<std::size_t>(it - edges.begin())] * effect[p];
    }
    effect[v] = total;
  }
  return effect[y];
}

}  // namespace snap::adjustment
