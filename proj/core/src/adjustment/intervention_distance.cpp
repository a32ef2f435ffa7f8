#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "snap/adjustment/adjustment.hpp"
#include "snap/error.hpp"

namespace snap::adjustment {

double intervention_distance(const PairMap& true_effects, const EstimateMap& estimates,
                             const VertexSet& targets) {
  if (targets.size() < 2) throw Error(Errc::InvalidQuery, "need at least two targets");
  double total = 0.0;
  std::size_t pairs = 0;
  for (Vertex a : targets) {
    for (Vertex b : targets) {
      if (a == b) continue;
      const auto truth = true_effects.find({a, b});
      const auto est = estimates.find({a, b});
      if (truth == true_effects.end() || est == estimates.end() || est->second.values.empty()) {
        throw Error(Errc::MissingPair, fmt::format("no effect recorded for pair ({}, {})", a, b));
      }
      double inner = 0.0;
      for (double v : est->second.values) inner += std::abs(truth->second - v);
      total += inner / static_cast<double>(est->second.values.size());
      ++pairs;
    }
  }
  return total / static_cast<double>(pairs);
}

void write_effect_report(std::ostream& out, const EstimateMap& estimates,
                         const std::vector<std::string>& names) {
  auto name = [&](Vertex v) { return v < names.size() ? names[v] : std::to_string(v); };
  out << "cause,outcome,identifiable,n_estimates,mean_estimate,adjustment_set\n";
  for (const auto& [pair, est] : estimates) {
    std::string sets;
    for (std::size_t i = 0; i < est.adjustment_sets.size(); ++i) {
      if (i) sets += '|';
      for (std::size_t j = 0; j < est.adjustment_sets[i].size(); ++j) {
        if (j) sets += ';';
        sets += name(est.adjustment_sets[i][j]);
      }
    }
    out << fmt::format("{},{},{},{},{},{}\n", name(pair.first), name(pair.second),
                       est.identifiable ? "true" : "false", est.values.size(), est.mean(), sets);
  }
}

}  // namespace snap::adjustment
