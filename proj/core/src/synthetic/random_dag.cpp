#include <algorithm>
#include <numeric>
#include <set>

#include "snap/error.hpp"
#include "snap/synthetic/synthetic.hpp"

namespace snap::synthetic {

Dag random_dag(const GenConfig& cfg) {
  const std::size_t n = cfg.n_vertices;
  if (n == 0) throw Error(Errc::InvalidConfig, "graph needs at least one vertex");
  if (n == 1) return Dag(1, {}, default_labels(1));
  if (cfg.expected_degree < 0.0 || cfg.expected_degree > static_cast<double>(n - 1)) {
    throw Error(Errc::InvalidConfig, "expected degree must lie in [0, n_vertices - 1]");
  }

  Rng rng(cfg.seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);

  // Edges are stored as positions in `order`, so (i, j) with i < j is acyclic.
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> degree(n, 0);
  if (n > 1) {
    const double p = cfg.expected_degree / static_cast<double>(n - 1);
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) {
          edges.insert({i, j});
          ++degree[i];
          ++degree[j];
        }
  }

  const std::size_t target_edges = edges.size();
  std::size_t lost = 0;
  std::uniform_int_distribution<std::size_t> pick_vertex(0, n - 1);
  for (std::size_t v = 0; v < n; ++v) {
    while (degree[v] > cfg.max_degree) {
      std::vector<std::pair<std::size_t, std::size_t>> incident;
      for (const auto& e : edges)
        if (e.first == v || e.second == v) incident.push_back(e);
      std::uniform_int_distribution<std::size_t> pick_edge(0, incident.size() - 1);
      const auto drop = incident[pick_edge(rng)];
      edges.erase(drop);
      --degree[drop.first];
      --degree[drop.second];

      bool replaced = false;
      for (int attempt = 0; attempt < 1000 && !replaced; ++attempt) {
        std::size_t a = pick_vertex(rng);
        std::size_t b = pick_vertex(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (degree[a] >= cfg.max_degree || degree[b] >= cfg.max_degree || edges.count({a, b})) continue;
        edges.insert({a, b});
        ++degree[a];
        ++degree[b];
        replaced = true;
      }
      if (!replaced) ++lost;
    }
  }
  // Losing more than a twentieth of the sampled edges means the cap is too
  // tight for the requested density.
  if (lost * 20 > target_edges) {
    throw Error(Errc::InfeasibleConfig, "degree cap cannot be met at the requested density");
  }

  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [i, j] : edges) out.push_back({order[i], order[j]});
  return Dag(n, std::move(out), default_labels(n));
}

}  // namespace snap::synthetic
