#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "snap/graph/vertex_set.hpp"

namespace snap {

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed acyclic graph. Construction validates the edge list and
/// throws `Error` with `Errc::CyclicGraph` on cycles and `Errc::InvalidGraph`
/// on self-loops or duplicate edges.
class Dag {
 public:
  Dag() = default;
  Dag(std::size_t n_vertices, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t n_vertices() const noexcept { return parents_.size(); }
  std::size_t n_edges() const noexcept { return edges_.size(); }

  /// Sorted by (from, to).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> parents(Vertex v) const { return parents_.at(v); }
  std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
  bool has_edge(Vertex from, Vertex to) const;
  bool adjacent(Vertex a, Vertex b) const { return has_edge(a, b) || has_edge(b, a); }

  const std::vector<Vertex>& topological_order() const noexcept { return topo_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// The stored label, or the decimal index when the graph is unlabeled.
  std::string label(Vertex v) const;

  friend bool operator==(const Dag& a, const Dag& b) {
    return a.n_vertices() == b.n_vertices() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> parents_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> topo_;
  std::vector<std::string> labels_;
};

/// Kahn's algorithm with a min-heap, so ties resolve to the smallest index.
std::vector<Vertex> topological_order(std::size_t n_vertices, std::span<const Edge> edges);
std::vector<Vertex> topological_order(const Dag& dag);

/// Ancestors of `targets`, targets included.
VertexSet ancestors(const Dag& dag, const VertexSet& targets);
/// Descendants of `sources`, sources included.
VertexSet descendants(const Dag& dag, const VertexSet& sources);

/// d-separation of x and y given s, evaluated by active-trail reachability.
/// Throws `Errc::InvalidQuery` when x == y or either endpoint is in s.
bool d_separated(const Dag& dag, Vertex x, Vertex y, const VertexSet& s);
bool d_separated(const Dag& dag, Vertex x, Vertex y, std::span<const Vertex> s);

}  // namespace snap
