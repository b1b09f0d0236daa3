#pragma once

#include <cstdint>
#include <random>

namespace relex {

/// Seeded deterministic random stream. The raw mt19937_64 output sequence is
/// fixed by the standard, and all derived draws below avoid std::
/// distributions, so identical seeds reproduce identical values on every
/// platform. Concurrent consumers must use independent streams (distinct
/// seeds or split()).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on {0,...,n-1}, unbiased. n must be positive.
  std::uint64_t next_below(std::uint64_t n);

  /// Derives an independent child stream; children with distinct stream ids
  /// (and parents with distinct seeds) do not overlap in practice.
  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace relex
