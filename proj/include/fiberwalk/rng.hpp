#pragma once

#include "fiberwalk/numeric.hpp"

#include <cstdint>

namespace fiberwalk {

// SplitMix64: published 64-bit generator, splittable via seed derivation.
// Every trace records its seed, so runs are reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; exact.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SplitMix64::below(0)");
    if (n == 1) return 0;
    const std::uint64_t limit = (~0ull / n) * n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [0, n) for arbitrary-precision n; rejection on fixed-width
  // draws, exact.
  Int below_big(const Int& n) {
    if (n <= 0) throw std::invalid_argument("SplitMix64::below_big: n <= 0");
    if (n == 1) return 0;
    const unsigned bits = static_cast<unsigned>(msb(n)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_shift = words * 64 - bits;
    for (;;) {
      Int x = 0;
      for (unsigned w = 0; w < words; ++w) {
        x <<= 64;
        x += next();
      }
      x >>= top_shift;  // x uniform in [0, 2^bits)
      if (x < n) return x;
    }
  }

  double real01() { return double(next() >> 11) * 0x1.0p-53; }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace fiberwalk
