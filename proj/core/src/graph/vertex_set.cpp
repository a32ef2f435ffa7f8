#include "snap/graph/vertex_set.hpp"

#include <string>

#include "snap/error.hpp"

namespace snap {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw Error(Errc::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside universe " + std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Vertex VertexSet::next_from(Vertex start) const noexcept {
  if (start >= universe_) return universe_;
  std::size_t wi = start >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w != 0) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi >= words_.size()) return universe_;
    w = words_[wi];
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(Errc::SizeMismatch, "vertex sets over universes " + std::to_string(universe_) +
                                        " and " + std::to_string(other.universe_));
  }
}

}  // namespace snap
