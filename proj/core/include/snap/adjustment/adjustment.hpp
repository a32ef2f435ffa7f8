#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "snap/ci/dataset.hpp"
#include "snap/graph/dag.hpp"
#include "snap/graph/mixed_graph.hpp"

namespace snap::adjustment {

// Graph-side identification. `g` is a CPDAG (or a discovery output over a
// possibly ancestral set); paths never cross bidirected edges.

/// Vertices other than x on proper possibly directed paths from x to y
/// (paths that leave x once and never return). Empty when y is unreachable.
VertexSet causal_nodes(const MixedGraph& g, Vertex x, Vertex y);

/// Possible descendants of the causal nodes.
VertexSet forbidden_set(const MixedGraph& g, Vertex x, Vertex y);

/// True iff every proper possibly directed path from x to y starts with a
/// directed edge out of x; the effect of x on y is then identifiable by
/// covariate adjustment.
bool is_amenable(const MixedGraph& g, Vertex x, Vertex y);

/// PossAn({x, y}) minus (Forb(x, y) + {x, y}). Throws `Errc::NotIdentifiable`.
VertexSet canonical_adjustment(const MixedGraph& g, Vertex x, Vertex y);

/// Pa(Cn(x, y)) minus (Forb(x, y) + {x}), with Pa the definite parents.
/// Throws `Errc::NotIdentifiable`.
VertexSet optimal_adjustment(const MixedGraph& g, Vertex x, Vertex y);

/// Definite parents of x. Throws `Errc::UndirectedIncidence` when x has an
/// undirected neighbour.
VertexSet parent_adjustment(const MixedGraph& g, Vertex x);

// Estimation.

/// Coefficient of x in the least-squares fit of y on an intercept, x and z.
/// Throws `Errc::SingularDesign` for rank-deficient or underdetermined designs.
double estimate_effect_ols(const ci::Dataset& data, Vertex x, Vertex y, std::span<const Vertex> z);
double estimate_effect_ols(const ci::Dataset& data, Vertex x, Vertex y, const VertexSet& z);

/// Local enumeration over the undirected neighbourhood of x: every subset S
/// of x's undirected neighbours that, together with x's definite parents,
/// creates no new v-structure at x yields one candidate parent set. An
/// assignment where y is a parent of x contributes an effect of 0. Returns
/// the distinct effects in ascending order.
std::vector<double> possible_effects_local(const ci::Dataset& data, const MixedGraph& g, Vertex x,
                                           Vertex y);

struct EffectEstimate {
  std::vector<double> values;
  bool identifiable = false;
  /// One adjustment set per value (only the first is used when identifiable).
  std::vector<std::vector<Vertex>> adjustment_sets;

  double mean() const;
};

/// Amenable pairs: OLS with the optimal adjustment set, or exactly 0 when
/// there is no possibly directed path from x to y. Otherwise the set of
/// possible effects from `possible_effects_local`.
EffectEstimate estimate_effect(const ci::Dataset& data, const MixedGraph& g, Vertex x, Vertex y);

// Ground truth and evaluation.

/// Total effect of x on y in a linear SEM: the sum over directed paths of the
/// product of edge weights. `weights` is aligned with `dag.edges()`.
double true_total_effect(const Dag& dag, std::span<const double> weights, Vertex x, Vertex y);

using PairMap = std::map<std::pair<Vertex, Vertex>, double>;
using EstimateMap = std::map<std::pair<Vertex, Vertex>, EffectEstimate>;

/// Mean over ordered target pairs of the mean absolute error across each
/// pair's estimate set. Throws `Errc::MissingPair` if a pair is not covered.
double intervention_distance(const PairMap& true_effects, const EstimateMap& estimates,
                             const VertexSet& targets);

/// CSV rows: cause, outcome, identifiable, n_estimates, mean_estimate,
/// adjustment_set (names joined by ';', sets of non-identifiable pairs
/// separated by '|').
void write_effect_report(std::ostream& out, const EstimateMap& estimates,
                         const std::vector<std::string>& names);

}  // namespace snap::adjustment
