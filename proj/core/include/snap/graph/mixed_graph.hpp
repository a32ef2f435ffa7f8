#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snap/graph/dag.hpp"
#include "snap/graph/vertex_set.hpp"

namespace snap {

/// Mark at one endpoint of an edge.
enum class Mark : std::uint8_t { None, Tail, Arrow };

/// Edge status of an ordered pair (u, v), read from u's side.
enum class EdgeKind : std::uint8_t {
  None,
  Undirected,  // u -- v
  Forward,     // u -> v
  Backward,    // u <- v
  Bidirected,  // u <-> v
};

/// Graph with undirected, directed and bidirected edges; at most one edge per
/// unordered pair. Each edge is stored as two endpoint marks, so orienting
/// with a wildcard (`put_arrowhead`) composes naturally and conflicting
/// orientations end up bidirected.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(std::size_t n_vertices, std::vector<std::string> labels = {});

  static MixedGraph complete_undirected(std::size_t n_vertices);
  static MixedGraph from_dag(const Dag& dag);

  std::size_t n_vertices() const noexcept { return n_; }
  std::size_t n_edges() const noexcept { return n_edges_; }

  bool adjacent(Vertex u, Vertex v) const { return mark_at(u, v) != Mark::None; }
  /// Mark at the `v` end of the edge u -- v.
  Mark mark_at(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return marks_[u * n_ + v];
  }
  EdgeKind kind(Vertex u, Vertex v) const;

  bool is_undirected(Vertex u, Vertex v) const { return kind(u, v) == EdgeKind::Undirected; }
  /// True for u -> v only.
  bool is_directed(Vertex u, Vertex v) const { return kind(u, v) == EdgeKind::Forward; }
  bool is_bidirected(Vertex u, Vertex v) const { return kind(u, v) == EdgeKind::Bidirected; }

  void set_edge(Vertex u, Vertex v, EdgeKind kind);
  void add_undirected(Vertex u, Vertex v) { set_edge(u, v, EdgeKind::Undirected); }
  void add_directed(Vertex u, Vertex v) { set_edge(u, v, EdgeKind::Forward); }
  void add_bidirected(Vertex u, Vertex v) { set_edge(u, v, EdgeKind::Bidirected); }
  void remove_edge(Vertex u, Vertex v);

  /// Puts an arrowhead at `v` on the existing edge u *-* v, keeping the mark at u.
  void put_arrowhead(Vertex u, Vertex v);
  /// Turns the existing edge into u -> v.
  void orient(Vertex u, Vertex v) { set_edge(u, v, EdgeKind::Forward); }

  /// Adjacent vertices in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }
  /// Definite parents: u with u -> v.
  std::vector<Vertex> parents(Vertex v) const;
  std::vector<Vertex> children(Vertex v) const;
  std::vector<Vertex> undirected_neighbors(Vertex v) const;

  /// All adjacent pairs (u, v) with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> adjacent_pairs() const;
  bool has_bidirected() const;

  /// Same adjacencies with every edge undirected.
  MixedGraph skeleton() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Vertex v) const;

  /// Compares structure only; labels are metadata.
  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.marks_ == b.marks_;
  }

 private:
  void check(Vertex v) const;
  void link(Vertex u, Vertex v);
  void unlink(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t n_edges_ = 0;
  std::vector<Mark> marks_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

/// Vertices with a possibly directed path into some target (targets included).
/// Paths may use undirected edges and edges pointing towards the target;
/// bidirected edges are never traversed.
VertexSet possible_ancestors(const MixedGraph& g, const VertexSet& targets);
/// Mirror image of `possible_ancestors`.
VertexSet possible_descendants(const MixedGraph& g, const VertexSet& sources);

struct InducedSubgraph {
  MixedGraph graph;
  /// new index -> original index, ascending.
  std::vector<Vertex> to_original;
};

/// Edges of g among `keep`, re-indexed densely. Throws `Errc::EmptySelection`.
InducedSubgraph induced_subgraph(const MixedGraph& g, const VertexSet& keep);

/// Inverse of `induced_subgraph`'s re-indexing: places `g` back into a graph
/// of `n_vertices` vertices.
MixedGraph lift(const MixedGraph& g, std::span<const Vertex> to_original, std::size_t n_vertices);

/// CPDAG of the Markov equivalence class of `dag`.
MixedGraph cpdag_of(const Dag& dag);

/// Number of vertex pairs whose edge status differs. Throws `Errc::SizeMismatch`.
std::size_t shd(const MixedGraph& a, const MixedGraph& b);

/// Applies Meek's rules R1-R3 to a fixpoint. Bidirected edges are left
/// untouched and never match a rule pattern.
MixedGraph meek_closure(MixedGraph g);

}  // namespace snap
