#pragma once

#include <cstdint>
#include <random>

namespace triq {

// Seeded deterministic stream. All sampling is done with integer arithmetic
// on the raw 64-bit output so results do not depend on the standard
// library's distribution implementations.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(mix(seed)) {}

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // True with probability exactly 2^-s.
  bool one_in_pow2(unsigned s) {
    if (s == 0) return true;
    if (s >= 64) return false;
    return (next() >> (64 - s)) == 0;
  }

  // Independent child stream; the same (parent seed, key) always gives the
  // same child regardless of how much the parent has been consumed.
  [[nodiscard]] RandomSource split(std::uint64_t key) const {
    return RandomSource(mix(seed_ ^ mix(key + 0x632be59bd9b4e019ULL)));
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace triq
