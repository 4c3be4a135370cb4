#pragma once

#include <cstdint>

namespace cadec {

// SplitMix64 finalizer; bijective on 64-bit words.
inline constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic per-sample random stream: xoshiro256++ seeded from
// (seed, stream) through SplitMix64. Equal (seed, stream) pairs reproduce
// identical draw sequences on every platform; distinct streams derived
// from one seed are the mechanism behind reproducible parallel sampling.
class RngStream {
 public:
  explicit RngStream(uint64_t seed, uint64_t stream = 0);

  uint64_t next_u64();

  // Uniform on [0,1), 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., bound-1}, rejection sampled (no modulo bias).
  uint64_t below(uint64_t bound);

  // Standard normal via the Marsaglia polar method.
  double normal();

  // Exact binomial variate. Bernoulli counting for small trial counts,
  // CDF inversion from zero for small means, inversion anchored at the
  // mode otherwise. No normal approximation anywhere.
  int64_t binomial(int64_t trials, double p);

 private:
  uint64_t state_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace cadec
