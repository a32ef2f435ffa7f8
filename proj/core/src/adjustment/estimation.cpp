#include <Eigen/Dense>
#include <algorithm>
#include <numeric>

#include "snap/adjustment/adjustment.hpp"
#include "snap/error.hpp"

namespace snap::adjustment {

double estimate_effect_ols(const ci::Dataset& data, Vertex x, Vertex y, std::span<const Vertex> z) {
  const std::size_t p = data.n_columns();
  if (x >= p || y >= p) throw Error(Errc::IndexOutOfRange, "regression column outside the dataset");
  if (x == y) throw Error(Errc::InvalidQuery, "cause and outcome coincide");
  for (Vertex v : z) {
    if (v >= p) throw Error(Errc::IndexOutOfRange, "adjustment column outside the dataset");
    if (v == x || v == y) throw Error(Errc::InvalidQuery, "adjustment set contains cause or outcome");
  }
  const auto n = static_cast<Eigen::Index>(data.n_samples());
  const auto cols = static_cast<Eigen::Index>(z.size() + 2);
  if (n <= cols) throw Error(Errc::SingularDesign, "fewer samples than regression coefficients");

  Eigen::MatrixXd design(n, cols);
  design.col(0).setOnes();
  design.col(1) = Eigen::Map<const Eigen::VectorXd>(data.column(x).data(), n);
  for (std::size_t j = 0; j < z.size(); ++j)
    design.col(static_cast<Eigen::Index>(j + 2)) = Eigen::Map<const Eigen::VectorXd>(data.column(z[j]).data(), n);
  const Eigen::Map<const Eigen::VectorXd> response(data.column(y).data(), n);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < cols) throw Error(Errc::SingularDesign, "regression design is rank deficient");
  const Eigen::VectorXd beta = qr.solve(response);
  return beta(1);
}

double estimate_effect_ols(const ci::Dataset& data, Vertex x, Vertex y, const VertexSet& z) {
  const auto members = z.to_vector();
  return estimate_effect_ols(data, x, y, members);
}

namespace {

struct Candidate {
  double value;
  std::vector<Vertex> parents;
};

std::vector<Candidate> local_candidates(const ci::Dataset& data, const MixedGraph& g, Vertex x, Vertex y) {
  if (x >= g.n_vertices() || y >= g.n_vertices()) {
    throw Error(Errc::IndexOutOfRange, "query vertex outside the graph");
  }
  if (x == y) throw Error(Errc::InvalidQuery, "cause and outcome coincide");
  const auto pa = g.parents(x);
  const auto sib = g.undirected_neighbors(x);
  if (sib.size() >= 30) throw Error(Errc::InvalidQuery, "too many undirected neighbours to enumerate");

  std::vector<Candidate> out;
  const bool y_parent = std::find(pa.begin(), pa.end(), y) != pa.end();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sib.size()); ++mask) {
    std::vector<Vertex> chosen;
    for (std::size_t i = 0; i < sib.size(); ++i)
      if (mask >> i & 1U) chosen.push_back(sib[i]);

    // A chosen neighbour pointing into x must be adjacent to every other
    // parent, otherwise x becomes the collider of a new v-structure.
    bool valid = true;
    for (std::size_t i = 0; i < chosen.size() && valid; ++i) {
      for (std::size_t j = i + 1; j < chosen.size() && valid; ++j) valid = g.adjacent(chosen[i], chosen[j]);
      for (Vertex q : pa)
        if (valid) valid = g.adjacent(chosen[i], q);
    }
    if (!valid) continue;

    std::vector<Vertex> parents = pa;
    parents.insert(parents.end(), chosen.begin(), chosen.end());
    std::sort(parents.begin(), parents.end());
    const bool reversed = y_parent || std::find(chosen.begin(), chosen.end(), y) != chosen.end();
    out.push_back({reversed ? 0.0 : estimate_effect_ols(data, x, y, parents), std::move(parents)});
  }
  return out;
}

}  // namespace

std::vector<double> possible_effects_local(const ci::Dataset& data, const MixedGraph& g, Vertex x,
                                           Vertex y) {
  std::vector<double> values;
  for (const auto& c : local_candidates(data, g, x, y)) values.push_back(c.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

double EffectEstimate::mean() const {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

EffectEstimate estimate_effect(const ci::Dataset& data, const MixedGraph& g, Vertex x, Vertex y) {
  EffectEstimate est;
  if (is_amenable(g, x, y)) {
    est.identifiable = true;
    if (causal_nodes(g, x, y).empty()) {
      est.values = {0.0};
      est.adjustment_sets = {{}};
      return est;
    }
    const auto z = optimal_adjustment(g, x, y).to_vector();
    est.values = {estimate_effect_ols(data, x, y, z)};
    est.adjustment_sets = {z};
    return est;
  }
  auto candidates = local_candidates(data, g, x, y);
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  for (auto& c : candidates) {
    if (!est.values.empty() && est.values.back() == c.value) continue;
    est.values.push_back(c.value);
    est.adjustment_sets.push_back(std::move(c.parents));
  }
  return est;
}

}  // namespace snap::adjustment
