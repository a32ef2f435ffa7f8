#pragma once

#include <filesystem>
#include <iosfwd>

#include "snap/graph/dag.hpp"
#include "snap/graph/mixed_graph.hpp"

namespace snap {

// Plain-text edge lists:
//
//   # comment
//   vertices: 4        (optional, forces the vertex count)
//   A -> B
//   B -- C
//   C <-> D
//   E                  (a bare name declares an isolated vertex)
//
// Vertices are indexed in order of first appearance. With a `vertices:`
// header, vertices that never appear get their index as label.

MixedGraph read_edge_list(std::istream& in);
MixedGraph load_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const MixedGraph& g);
void save_edge_list(const std::filesystem::path& path, const MixedGraph& g);

/// Throws `Errc::InvalidGraph` if g has a non-directed edge, `Errc::CyclicGraph` on cycles.
Dag to_dag(const MixedGraph& g);

}  // namespace snap
