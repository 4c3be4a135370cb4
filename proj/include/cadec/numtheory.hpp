#pragma once

#include <cstdint>
#include <vector>

namespace cadec {

// All positive divisors of `value`, complete and strictly increasing.
struct DivisorList {
  int64_t value = 1;
  std::vector<int64_t> divisors;
};

// Moebius function, {-1, 0, 1}. Rejects m = 0.
int mobius(int64_t m);

// Euler totient. Rejects m = 0.
int64_t totient(int64_t m);

DivisorList divisors(int64_t value);

// base^exp in signed 64 bits; throws std::overflow_error on wrap.
int64_t checked_pow(int64_t base, int exp);

// Number of length-sigma words over an n-letter alphabet whose minimal
// period is exactly sigma: sum over d | sigma of n^d * mobius(sigma/d).
// Exact as long as n^sigma fits in int64 (n = 100, sigma = 4 gives 1e8,
// far inside the envelope); anything larger throws std::overflow_error.
int64_t count_aperiodic(int sigma, int64_t n);

}  // namespace cadec
