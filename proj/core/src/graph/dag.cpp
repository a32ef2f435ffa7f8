#include "snap/graph/dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "snap/error.hpp"

namespace snap {

namespace {

void check_vertex(const Dag& dag, Vertex v) {
  if (v >= dag.n_vertices()) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " not in a graph of " +
                                           std::to_string(dag.n_vertices()) + " vertices");
  }
}

}  // namespace

std::vector<Vertex> topological_order(std::size_t n_vertices, std::span<const Edge> edges) {
  std::vector<std::size_t> indegree(n_vertices, 0);
  std::vector<std::vector<Vertex>> out(n_vertices);
  for (const auto& e : edges) {
    if (e.from >= n_vertices || e.to >= n_vertices) {
      throw Error(Errc::IndexOutOfRange, "edge endpoint outside the vertex range");
    }
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n_vertices; ++v)
    if (indegree[v] == 0) ready.push(v);

  std::vector<Vertex> order;
  order.reserve(n_vertices);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : out[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() != n_vertices) throw Error(Errc::CyclicGraph, "edge list contains a directed cycle");
  return order;
}

std::vector<Vertex> topological_order(const Dag& dag) { return dag.topological_order(); }

Dag::Dag(std::size_t n_vertices, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)),
      parents_(n_vertices),
      children_(n_vertices),
      labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_vertices) {
    throw Error(Errc::SizeMismatch, "label count differs from vertex count");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.from >= n_vertices || e.to >= n_vertices) {
      throw Error(Errc::IndexOutOfRange, "edge endpoint outside the vertex range");
    }
    if (e.from == e.to) throw Error(Errc::InvalidGraph, "self-loop on vertex " + std::to_string(e.from));
    if (i > 0 && edges_[i - 1] == e) {
      throw Error(Errc::InvalidGraph,
                  "duplicate edge " + std::to_string(e.from) + " -> " + std::to_string(e.to));
    }
    parents_[e.to].push_back(e.from);
    children_[e.from].push_back(e.to);
  }
  for (auto& p : parents_) std::sort(p.begin(), p.end());
  topo_ = snap::topological_order(n_vertices, edges_);
}

bool Dag::has_edge(Vertex from, Vertex to) const {
  check_vertex(*this, from);
  check_vertex(*this, to);
  const auto& ch = children_[from];
  return std::binary_search(ch.begin(), ch.end(), to);
}

std::string Dag::label(Vertex v) const {
  check_vertex(*this, v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

VertexSet ancestors(const Dag& dag, const VertexSet& targets) {
  if (targets.universe() != dag.n_vertices()) throw Error(Errc::SizeMismatch, "targets universe");
  VertexSet seen = targets;
  std::vector<Vertex> stack = targets.to_vector();
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex p : dag.parents(v)) {
      if (!seen.contains(p)) {
        seen.insert(p);
        stack.push_back(p);
      }
    }
  }
  return seen;
}

VertexSet descendants(const Dag& dag, const VertexSet& sources) {
  if (sources.universe() != dag.n_vertices()) throw Error(Errc::SizeMismatch, "sources universe");
  VertexSet seen = sources;
  std::vector<Vertex> stack = sources.to_vector();
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex c : dag.children(v)) {
      if (!seen.contains(c)) {
        seen.insert(c);
        stack.push_back(c);
      }
    }
  }
  return seen;
}

bool d_separated(const Dag& dag, Vertex x, Vertex y, const VertexSet& s) {
  if (s.universe() != dag.n_vertices()) throw Error(Errc::SizeMismatch, "conditioning set universe");
  const auto members = s.to_vector();
  return d_separated(dag, x, y, std::span<const Vertex>(members));
}

namespace {

// Per-thread scratch so oracle queries in hot loops do not allocate. Marks
// are epoch stamps, so nothing needs clearing between queries.
struct DsepScratch {
  std::vector<std::uint32_t> observed, ancestor, visited;
  std::vector<Vertex> work;
  std::vector<std::pair<Vertex, std::uint8_t>> stack;
  std::uint32_t epoch = 0;

  void begin(std::size_t n) {
    if (observed.size() < n) {
      observed.assign(n, 0);
      ancestor.assign(n, 0);
      visited.assign(2 * n, 0);
      epoch = 0;
    }
    if (++epoch == 0) {
      std::fill(observed.begin(), observed.end(), 0);
      std::fill(ancestor.begin(), ancestor.end(), 0);
      std::fill(visited.begin(), visited.end(), 0);
      epoch = 1;
    }
    work.clear();
    stack.clear();
  }
};

}  // namespace

bool d_separated(const Dag& dag, Vertex x, Vertex y, std::span<const Vertex> s) {
  check_vertex(dag, x);
  check_vertex(dag, y);
  for (Vertex v : s) check_vertex(dag, v);
  if (x == y) throw Error(Errc::InvalidQuery, "d-separation query with x == y");

  thread_local DsepScratch sc;
  sc.begin(dag.n_vertices());
  const std::uint32_t e = sc.epoch;
  for (Vertex v : s) {
    if (v == x || v == y) {
      throw Error(Errc::InvalidQuery, "d-separation query with an endpoint in the conditioning set");
    }
    sc.observed[v] = e;
    if (sc.ancestor[v] != e) {
      sc.ancestor[v] = e;
      sc.work.push_back(v);
    }
  }
  while (!sc.work.empty()) {
    const Vertex v = sc.work.back();
    sc.work.pop_back();
    for (Vertex p : dag.parents(v))
      if (sc.ancestor[p] != e) {
        sc.ancestor[p] = e;
        sc.work.push_back(p);
      }
  }

  // Active-trail search over (vertex, direction) states. `up` means the trail
  // arrived from a child, `down` that it arrived from a parent.
  enum : std::uint8_t { up = 0, down = 1 };
  sc.stack.emplace_back(x, up);
  while (!sc.stack.empty()) {
    auto [v, dir] = sc.stack.back();
    sc.stack.pop_back();
    if (sc.visited[2 * v + dir] == e) continue;
    sc.visited[2 * v + dir] = e;
    const bool observed = sc.observed[v] == e;
    if (!observed && v == y) return false;

    if (dir == up) {
      if (observed) continue;
      for (Vertex p : dag.parents(v)) sc.stack.emplace_back(p, up);
      for (Vertex c : dag.children(v)) sc.stack.emplace_back(c, down);
    } else {
      if (!observed)
        for (Vertex c : dag.children(v)) sc.stack.emplace_back(c, down);
      if (sc.ancestor[v] == e)
        for (Vertex p : dag.parents(v)) sc.stack.emplace_back(p, up);
    }
  }
  return true;
}

}  // namespace snap
