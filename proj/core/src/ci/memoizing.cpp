#include <algorithm>

#include "snap/ci/testers.hpp"

namespace snap::ci {

namespace {

constexpr std::size_t kMaxPacked = 16;
constexpr Vertex kMaxPackedVertex = 254;

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

std::size_t MemoizingTester::KeyHash::operator()(const std::vector<Vertex>& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : key) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t MemoizingTester::cache_size() const noexcept {
  std::size_t n = wide_.size();
  for (const auto& t : packed_) n += t.count;
  return n;
}

void MemoizingTester::forget_below(std::size_t order) {
  for (std::size_t i = 0; i < std::min(order, packed_.size()); ++i) packed_[i] = Table{};
  std::erase_if(wide_, [order](const auto& entry) { return entry.first.size() - 2 < order; });
}

namespace {

std::size_t slot_of(std::uint64_t lo, std::uint64_t hi, std::size_t mask) { return mix(lo ^ mix(hi)) & mask; }

}  // namespace

bool MemoizingTester::packed_lookup(Table& t, const PackedKey& key, Vertex x, Vertex y,
                                    std::span<const Vertex> s) {
  if (!recording_) {
    if (t.slots.empty()) return inner_.independent(x, y, s);
    const std::size_t mask = t.slots.size() - 1;
    for (std::size_t j = slot_of(key.lo, key.hi, mask); !(t.slots[j] == PackedKey{}); j = (j + 1) & mask)
      if (t.slots[j] == key) return t.verdicts[j] != 0;
    return inner_.independent(x, y, s);
  }
  // Keep the load factor at or below 3/4.
  if ((t.count + 1) * 4 > t.slots.size() * 3) {
    std::vector<PackedKey> old_slots = std::move(t.slots);
    std::vector<std::uint8_t> old_verdicts = std::move(t.verdicts);
    const std::size_t cap = old_slots.empty() ? 1024 : old_slots.size() * 2;
    t.slots.assign(cap, PackedKey{});
    t.verdicts.assign(cap, 0);
    for (std::size_t i = 0; i < old_slots.size(); ++i) {
      if (old_slots[i] == PackedKey{}) continue;
      std::size_t j = slot_of(old_slots[i].lo, old_slots[i].hi, cap - 1);
      while (!(t.slots[j] == PackedKey{})) j = (j + 1) & (cap - 1);
      t.slots[j] = old_slots[i];
      t.verdicts[j] = old_verdicts[i];
    }
  }
  const std::size_t mask = t.slots.size() - 1;
  std::size_t j = slot_of(key.lo, key.hi, mask);
  while (!(t.slots[j] == PackedKey{})) {
    if (t.slots[j] == key) return t.verdicts[j] != 0;
    j = (j + 1) & mask;
  }
  const bool verdict = inner_.independent(x, y, s);
  t.slots[j] = key;
  t.verdicts[j] = verdict ? 1 : 0;
  ++t.count;
  return verdict;
}

bool MemoizingTester::evaluate(Vertex x, Vertex y, std::span<const Vertex> s) {
  const Vertex lo = std::min(x, y), hi = std::max(x, y);
  // s is already sorted by CITester.
  if (s.size() + 2 <= kMaxPacked && hi <= kMaxPackedVertex &&
      (s.empty() || s.back() <= kMaxPackedVertex)) {
    // Byte i holds vertex i + 1, so zero bytes mark padding and the all-zero
    // key marks an empty slot.
    PackedKey key;
    auto put = [&key](std::size_t i, Vertex v) {
      const std::uint64_t b = static_cast<std::uint64_t>(v + 1);
      if (i < 8) key.lo |= b << (8 * i);
      else key.hi |= b << (8 * (i - 8));
    };
    put(0, lo);
    put(1, hi);
    for (std::size_t i = 0; i < s.size(); ++i) put(i + 2, s[i]);
    if (packed_.size() <= s.size()) packed_.resize(s.size() + 1);
    return packed_lookup(packed_[s.size()], key, x, y, s);
  }

  std::vector<Vertex> key;
  key.reserve(s.size() + 2);
  key.push_back(lo);
  key.push_back(hi);
  key.insert(key.end(), s.begin(), s.end());
  if (auto it = wide_.find(key); it != wide_.end()) return it->second;
  const bool verdict = inner_.independent(x, y, s);
  if (recording_) wide_.emplace(std::move(key), verdict);
  return verdict;
}

}  // namespace snap::ci
