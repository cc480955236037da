#pragma once

#include <cstdint>

#include "wrm/rational.hpp"

namespace wrm {

// splitmix64 step; also used to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

// Deterministic generator for randomized verification sweeps. Avoids
// std::uniform_int_distribution so identical seeds give identical streams on
// every platform. Rejected hypothesis-violating samples are counted.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, bound), bound >= 1; rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Numerator in [-num_mag, num_mag], denominator in [1, den_max].
  Rational rational(long num_mag = 6, long den_max = 4) {
    return Rational(int_in(-num_mag, num_mag), int_in(1, den_max));
  }

  Rational nonzero_rational(long num_mag = 6, long den_max = 4) {
    for (;;) {
      Rational r = rational(num_mag, den_max);
      if (!r.is_zero()) return r;
      ++rejections_;
    }
  }

  std::uint64_t rejections() const { return rejections_; }
  void count_rejection() { ++rejections_; }

 private:
  std::uint64_t state_;
  std::uint64_t rejections_ = 0;
};

}  // namespace wrm
