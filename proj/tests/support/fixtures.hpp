#pragma once

// Hand-built graphs shared by the unit and acceptance tests.

#include <vector>

#include "snap/graph/dag.hpp"
#include "snap/graph/mixed_graph.hpp"
#include "snap/graph/sepset_map.hpp"

namespace fixtures {

using snap::Dag;
using snap::MixedGraph;
using snap::SepsetMap;
using snap::Vertex;

// U->A, C->A, D->A, C->B, D->B, V->B
enum TwoColliders : Vertex { A, B, C, D, U, V };
Dag two_colliders();
/// Order-0 orientation: every true edge points into A or B, plus A <-> B.
MixedGraph two_colliders_order0_expected();

// X->U, U->A, G->X, G->E, G->C, E->A, C->A, A->B, V->B, V->X. The collider
// at B only shows up once the spurious A - X edge is removed.
enum Masked : Vertex { eA, eB, eC, eE, eG, eU, eV, eX };
Dag masked_collider();

/// A skeleton search state at order 3: the true skeleton
/// plus a spurious A - X edge, with sepset(X,B) = {G,U,V},
/// sepset(A,G) = {E,C,X}, sepset(A,V) = {G,X}, and the smallest separating
/// set for every other non-adjacent pair.
void masked_collider_replay(MixedGraph& skeleton, SepsetMap& sepsets);

/// PC orientation of the replayed state (A <-> B).
MixedGraph masked_collider_pc_expected();
/// RFCI orientation of the replayed state (A -> B, A - X removed).
MixedGraph masked_collider_rfci_expected();

/// Smallest separating set of x and y (by size, then lexicographic), by
/// brute force over path-enumeration d-separation.
std::vector<Vertex> smallest_sepset(const Dag& dag, Vertex x, Vertex y);

}  // namespace fixtures
