#include "snap/synthetic/synthetic.hpp"

namespace snap::synthetic {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t base, std::uint64_t replicate, Purpose purpose) {
  return splitmix64(splitmix64(splitmix64(base) ^ replicate) ^ static_cast<std::uint64_t>(purpose));
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back("X" + std::to_string(i));
  return out;
}

}  // namespace snap::synthetic
