#include <algorithm>
#include <numeric>

#include "snap/adjustment/adjustment.hpp"
#include "snap/error.hpp"
#include "snap/graph/mixed_graph.hpp"
#include "snap/synthetic/synthetic.hpp"

namespace snap::synthetic {

namespace {

std::vector<Vertex> draw(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::vector<Vertex> out;
  std::sample(all.begin(), all.end(), std::back_inserter(out), static_cast<std::ptrdiff_t>(k), rng);
  return out;
}

}  // namespace

VertexSet sample_targets(const Dag& dag, std::size_t n_targets, TargetMode mode, std::uint64_t seed,
                         std::size_t retries) {
  const std::size_t n = dag.n_vertices();
  if (n_targets == 0 || n_targets > n) throw Error(Errc::InvalidQuery, "need 1 <= n_targets <= n_vertices");
  Rng rng(seed);
  if (mode == TargetMode::Random) {
    const auto picked = draw(n, n_targets, rng);
    return VertexSet(n, std::span<const Vertex>(picked));
  }

  // Pairwise relations are computed lazily and cached; a draw is then a pure
  // table lookup.
  const MixedGraph cpdag = cpdag_of(dag);
  std::vector<VertexSet> anc(n);
  std::vector<bool> anc_done(n, false);
  std::vector<signed char> amenable(n * n, -1);
  auto ancestor_of = [&](Vertex a, Vertex b) {
    if (!anc_done[b]) {
      anc[b] = ancestors(dag, VertexSet(n, {b}));
      anc_done[b] = true;
    }
    return anc[b].contains(a);
  };
  auto is_amenable = [&](Vertex a, Vertex b) {
    auto& slot = amenable[a * n + b];
    if (slot < 0) slot = adjustment::is_amenable(cpdag, a, b) ? 1 : 0;
    return slot == 1;
  };

  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    const auto picked = draw(n, n_targets, rng);
    bool ok = picked.size() >= 2;
    for (std::size_t i = 0; ok && i < picked.size(); ++i)
      for (std::size_t j = 0; ok && j < picked.size(); ++j)
        if (i != j) ok = is_amenable(picked[i], picked[j]);
    for (std::size_t i = 0; ok && i < picked.size(); ++i) {
      bool related = false;
      for (std::size_t j = 0; !related && j < picked.size(); ++j)
        if (i != j) related = ancestor_of(picked[i], picked[j]) || ancestor_of(picked[j], picked[i]);
      ok = related;
    }
    if (ok) return VertexSet(n, std::span<const Vertex>(picked));
  }
  throw Error(Errc::NoIdentifiableSet, "no identifiable target set found within the retry budget");
}

}  // namespace snap::synthetic
