#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "snap/graph/vertex_set.hpp"

namespace snap {

/// Separating sets keyed by unordered vertex pair. Stored sets are sorted.
class SepsetMap {
 public:
  /// Overwrites any previous entry. Throws `Errc::InvalidQuery` if the set
  /// contains x or y.
  void set(Vertex x, Vertex y, std::span<const Vertex> sepset);
  const std::vector<Vertex>* find(Vertex x, Vertex y) const;
  bool contains_pair(Vertex x, Vertex y) const { return find(x, y) != nullptr; }
  /// Throws `Errc::MissingSepset` if the pair was never separated.
  const std::vector<Vertex>& at(Vertex x, Vertex y) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>>& entries() const noexcept {
    return entries_;
  }

  friend bool operator==(const SepsetMap&, const SepsetMap&) = default;

 private:
  static std::pair<Vertex, Vertex> key(Vertex x, Vertex y) {
    return x < y ? std::pair{x, y} : std::pair{y, x};
  }

  std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> entries_;
};

}  // namespace snap
