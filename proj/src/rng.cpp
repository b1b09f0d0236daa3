#include "relex/rng.hpp"

#include <stdexcept>

namespace relex {

namespace {

// splitmix64; used only to derive child-stream seeds.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::next_below: empty range");
  // rejection sampling over the smallest covering power-of-two mask
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t v = gen_() & mask;
    if (v < n) return v;
  }
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(mix(mix(seed_) ^ mix(stream + 0x6a09e667f3bcc909ULL)));
}

}  // namespace relex
