#pragma once

#include <cstdint>

namespace sepchi {

// SplitMix64. All seeded sampling goes through this generator so that runs
// are reproducible bit-for-bit across platforms (no std::*_distribution).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Draw true with probability num/den exactly (up to 2^-64 quantization).
  bool chance(std::uint64_t num, std::uint64_t den) {
    if (num >= den) return true;
    const std::uint64_t threshold = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(num) << 64) / den);
    return next() < threshold;
  }

  // Uniform value in [0, bound) via rejection, bias-free.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sepchi
