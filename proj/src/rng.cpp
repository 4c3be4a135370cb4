#include "cadec/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace cadec {

namespace {

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream) {
  uint64_t x = mix64(seed ^ mix64(stream ^ 0x5851f42d4c957f2dULL));
  for (auto& word : state_) {
    x = mix64(x);
    word = x;
  }
  state_[0] |= 1;  // xoshiro forbids the all-zero state
}

uint64_t RngStream::next_u64() {
  // xoshiro256++
  const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

uint64_t RngStream::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
  const uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
  for (;;) {
    const uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  cached_normal_ = v * f;
  has_cached_normal_ = true;
  return u * f;
}

int64_t RngStream::binomial(int64_t trials, double p) {
  if (trials < 0) throw std::invalid_argument("binomial: negative trial count");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: p outside [0,1]");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (p > 0.5) return trials - binomial(trials, 1.0 - p);

  if (trials <= 64) {
    int64_t k = 0;
    for (int64_t i = 0; i < trials; ++i) k += next_double() < p;
    return k;
  }

  const double mean = static_cast<double>(trials) * p;
  if (mean <= 64.0) {
    // CDF inversion walking up from zero.
    const double ratio = p / (1.0 - p);
    double pmf = std::exp(static_cast<double>(trials) * std::log1p(-p));
    double cdf = pmf;
    const double u = next_double();
    int64_t k = 0;
    while (u > cdf && k < trials) {
      ++k;
      pmf *= ratio * static_cast<double>(trials - k + 1) / static_cast<double>(k);
      cdf += pmf;
    }
    return k;
  }

  // Inversion anchored at the mode, expanding outward over the pmf.
  const int64_t mode = static_cast<int64_t>(std::floor(static_cast<double>(trials + 1) * p));
  const double log_pm = std::lgamma(static_cast<double>(trials + 1)) -
                        std::lgamma(static_cast<double>(mode + 1)) -
                        std::lgamma(static_cast<double>(trials - mode + 1)) +
                        static_cast<double>(mode) * std::log(p) +
                        static_cast<double>(trials - mode) * std::log1p(-p);
  const double pm = std::exp(log_pm);
  const double u = next_double();
  double acc = pm;
  if (u <= acc) return mode;
  int64_t lo = mode - 1;
  int64_t hi = mode + 1;
  double plo = pm * static_cast<double>(mode) * (1.0 - p) /
               (static_cast<double>(trials - mode + 1) * p);
  double phi = pm * static_cast<double>(trials - mode) * p /
               (static_cast<double>(mode + 1) * (1.0 - p));
  while (lo >= 0 || hi <= trials) {
    if (hi <= trials && (lo < 0 || phi >= plo)) {
      acc += phi;
      if (u <= acc) return hi;
      ++hi;
      phi *= static_cast<double>(trials - hi + 1) * p / (static_cast<double>(hi) * (1.0 - p));
    } else {
      acc += plo;
      if (u <= acc) return lo;
      --lo;
      plo *= static_cast<double>(lo + 1) * (1.0 - p) / (static_cast<double>(trials - lo) * p);
    }
  }
  return mode;  // u landed in mass lost to rounding; vanishing probability
}

}  // namespace cadec
