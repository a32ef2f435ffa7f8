#include "snap/graph/mixed_graph.hpp"

#include <algorithm>

#include "snap/error.hpp"

namespace snap {

MixedGraph::MixedGraph(std::size_t n_vertices, std::vector<std::string> labels)
    : n_(n_vertices), marks_(n_vertices * n_vertices, Mark::None), adj_(n_vertices) {
  set_labels(std::move(labels));
}

MixedGraph MixedGraph::complete_undirected(std::size_t n_vertices) {
  MixedGraph g(n_vertices);
  for (Vertex u = 0; u < n_vertices; ++u)
    for (Vertex v = u + 1; v < n_vertices; ++v) g.add_undirected(u, v);
  return g;
}

MixedGraph MixedGraph::from_dag(const Dag& dag) {
  MixedGraph g(dag.n_vertices(), dag.labels());
  for (const auto& e : dag.edges()) g.add_directed(e.from, e.to);
  return g;
}

void MixedGraph::check(Vertex v) const {
  if (v >= n_) {
    throw Error(Errc::IndexOutOfRange,
                "vertex " + std::to_string(v) + " not in a graph of " + std::to_string(n_) + " vertices");
  }
}

EdgeKind MixedGraph::kind(Vertex u, Vertex v) const {
  const Mark at_v = mark_at(u, v);
  if (at_v == Mark::None) return EdgeKind::None;
  const Mark at_u = marks_[v * n_ + u];
  if (at_u == Mark::Tail) return at_v == Mark::Tail ? EdgeKind::Undirected : EdgeKind::Forward;
  return at_v == Mark::Tail ? EdgeKind::Backward : EdgeKind::Bidirected;
}

void MixedGraph::link(Vertex u, Vertex v) {
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex w) {
    list.insert(std::lower_bound(list.begin(), list.end(), w), w);
  };
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++n_edges_;
}

void MixedGraph::unlink(Vertex u, Vertex v) {
  auto erase_sorted = [](std::vector<Vertex>& list, Vertex w) {
    auto it = std::lower_bound(list.begin(), list.end(), w);
    if (it != list.end() && *it == w) list.erase(it);
  };
  erase_sorted(adj_[u], v);
  erase_sorted(adj_[v], u);
  --n_edges_;
}

void MixedGraph::set_edge(Vertex u, Vertex v, EdgeKind kind) {
  check(u);
  check(v);
  if (u == v) throw Error(Errc::InvalidGraph, "self-loop on vertex " + std::to_string(u));
  if (kind == EdgeKind::None) {
    remove_edge(u, v);
    return;
  }
  if (!adjacent(u, v)) link(u, v);
  Mark at_u = Mark::Tail;
  Mark at_v = Mark::Tail;
  switch (kind) {
    case EdgeKind::Forward: at_v = Mark::Arrow; break;
    case EdgeKind::Backward: at_u = Mark::Arrow; break;
    case EdgeKind::Bidirected: at_u = at_v = Mark::Arrow; break;
    default: break;
  }
  marks_[u * n_ + v] = at_v;
  marks_[v * n_ + u] = at_u;
}

void MixedGraph::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) return;
  marks_[u * n_ + v] = Mark::None;
  marks_[v * n_ + u] = Mark::None;
  unlink(u, v);
}

void MixedGraph::put_arrowhead(Vertex u, Vertex v) {
  if (!adjacent(u, v)) {
    throw Error(Errc::InvalidGraph,
                "no edge " + std::to_string(u) + " -- " + std::to_string(v) + " to orient");
  }
  marks_[u * n_ + v] = Mark::Arrow;
}

std::vector<Vertex> MixedGraph::parents(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u : neighbors(v))
    if (kind(u, v) == EdgeKind::Forward) out.push_back(u);
  return out;
}

std::vector<Vertex> MixedGraph::children(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u : neighbors(v))
    if (kind(v, u) == EdgeKind::Forward) out.push_back(u);
  return out;
}

std::vector<Vertex> MixedGraph::undirected_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u : neighbors(v))
    if (kind(v, u) == EdgeKind::Undirected) out.push_back(u);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> MixedGraph::adjacent_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(n_edges_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool MixedGraph::has_bidirected() const {
  for (auto [u, v] : adjacent_pairs())
    if (kind(u, v) == EdgeKind::Bidirected) return true;
  return false;
}

MixedGraph MixedGraph::skeleton() const {
  MixedGraph g(n_, labels_);
  for (auto [u, v] : adjacent_pairs()) g.add_undirected(u, v);
  return g;
}

void MixedGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw Error(Errc::SizeMismatch, "label count differs from vertex count");
  }
  labels_ = std::move(labels);
}

std::string MixedGraph::label(Vertex v) const {
  check(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

namespace {

// Walks possibly directed edges. `backwards` follows them against their
// direction (collecting ancestors).
VertexSet possibly_directed_reach(const MixedGraph& g, const VertexSet& start, bool backwards) {
  if (start.universe() != g.n_vertices()) throw Error(Errc::SizeMismatch, "vertex set universe");
  VertexSet seen = start;
  std::vector<Vertex> stack = start.to_vector();
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (seen.contains(u)) continue;
      // backwards: need u -- v or u -> v; forwards: v -- u or v -> u.
      const EdgeKind k = backwards ? g.kind(u, v) : g.kind(v, u);
      if (k == EdgeKind::Undirected || k == EdgeKind::Forward) {
        seen.insert(u);
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace

VertexSet possible_ancestors(const MixedGraph& g, const VertexSet& targets) {
  return possibly_directed_reach(g, targets, true);
}

VertexSet possible_descendants(const MixedGraph& g, const VertexSet& sources) {
  return possibly_directed_reach(g, sources, false);
}

InducedSubgraph induced_subgraph(const MixedGraph& g, const VertexSet& keep) {
  if (keep.universe() != g.n_vertices()) throw Error(Errc::SizeMismatch, "keep-set universe");
  if (keep.empty()) throw Error(Errc::EmptySelection, "induced subgraph over no vertices");
  InducedSubgraph out;
  out.to_original = keep.to_vector();
  std::vector<Vertex> to_new(g.n_vertices(), g.n_vertices());
  for (Vertex i = 0; i < out.to_original.size(); ++i) to_new[out.to_original[i]] = i;

  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Vertex v : out.to_original) labels.push_back(g.labels()[v]);
  out.graph = MixedGraph(out.to_original.size(), std::move(labels));
  for (Vertex u : out.to_original) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && keep.contains(v)) out.graph.set_edge(to_new[u], to_new[v], g.kind(u, v));
    }
  }
  return out;
}

MixedGraph lift(const MixedGraph& g, std::span<const Vertex> to_original, std::size_t n_vertices) {
  if (to_original.size() != g.n_vertices()) throw Error(Errc::SizeMismatch, "index map size");
  MixedGraph out(n_vertices);
  for (auto [u, v] : g.adjacent_pairs()) out.set_edge(to_original[u], to_original[v], g.kind(u, v));
  return out;
}

MixedGraph cpdag_of(const Dag& dag) {
  const std::size_t n = dag.n_vertices();
  MixedGraph g(n, dag.labels());
  for (const auto& e : dag.edges()) g.add_undirected(e.from, e.to);
  for (Vertex c = 0; c < n; ++c) {
    auto pa = dag.parents(c);
    for (std::size_t i = 0; i < pa.size(); ++i) {
      for (std::size_t j = i + 1; j < pa.size(); ++j) {
        if (!dag.adjacent(pa[i], pa[j])) {
          g.orient(pa[i], c);
          g.orient(pa[j], c);
        }
      }
    }
  }
  return meek_closure(std::move(g));
}

std::size_t shd(const MixedGraph& a, const MixedGraph& b) {
  if (a.n_vertices() != b.n_vertices()) {
    throw Error(Errc::SizeMismatch, "graphs with " + std::to_string(a.n_vertices()) + " and " +
                                        std::to_string(b.n_vertices()) + " vertices");
  }
  std::size_t distance = 0;
  for (Vertex u = 0; u < a.n_vertices(); ++u)
    for (Vertex v = u + 1; v < a.n_vertices(); ++v)
      if (a.kind(u, v) != b.kind(u, v)) ++distance;
  return distance;
}

}  // namespace snap
