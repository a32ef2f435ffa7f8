#include "snap/graph/sepset_map.hpp"

#include <algorithm>
#include <string>

#include "snap/error.hpp"

namespace snap {

void SepsetMap::set(Vertex x, Vertex y, std::span<const Vertex> sepset) {
  if (x == y) throw Error(Errc::InvalidQuery, "sepset for a vertex with itself");
  std::vector<Vertex> sorted(sepset.begin(), sepset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::binary_search(sorted.begin(), sorted.end(), x) ||
      std::binary_search(sorted.begin(), sorted.end(), y)) {
    throw Error(Errc::InvalidQuery, "sepset of (" + std::to_string(x) + ", " + std::to_string(y) +
                                        ") contains an endpoint");
  }
  entries_[key(x, y)] = std::move(sorted);
}

const std::vector<Vertex>* SepsetMap::find(Vertex x, Vertex y) const {
  auto it = entries_.find(key(x, y));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::vector<Vertex>& SepsetMap::at(Vertex x, Vertex y) const {
  if (const auto* s = find(x, y)) return *s;
  throw Error(Errc::MissingSepset,
              "no separating set recorded for (" + std::to_string(x) + ", " + std::to_string(y) + ")");
}

}  // namespace snap
