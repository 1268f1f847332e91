#pragma once

#include <cstdint>
#include <vector>

#include "lcg/bits.hpp"
#include "lcg/errors.hpp"

namespace lcg {

// SplitMix64. Chosen over <random> engines because every report in this
// project must be byte-identical across platforms, and the standard
// distributions are not pinned by the standard.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; exact, no modulo bias.
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound == 0) throw DomainError("SplitMix64::bounded: zero bound");
    const std::uint64_t min = (0 - bound) % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x < min);
    return x % bound;
  }

  // `nbits` fresh bits as a Bits value.
  Bits bits(std::size_t nbits) {
    Bits out;
    std::size_t left = nbits;
    while (left >= 64) {
      out.append_uint(next(), 64);
      left -= 64;
    }
    if (left > 0) out.append_uint(next() >> (64 - left), left);
    return out;
  }

private:
  std::uint64_t state_;
};

// Uniform size-`count` subset of [0, universe), sorted ascending.
// Partial Fisher-Yates over an explicit index array.
std::vector<std::uint64_t> sample_sorted_subset(SplitMix64& rng,
                                                std::uint64_t universe,
                                                std::uint64_t count);

}  // namespace lcg
