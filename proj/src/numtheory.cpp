#include "cadec/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace cadec {

int mobius(int64_t m) {
  if (m < 1) throw std::invalid_argument("mobius: argument must be positive");
  int prime_count = 0;
  for (int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;  // squared factor
      ++prime_count;
    }
  }
  if (m > 1) ++prime_count;
  return (prime_count % 2 == 0) ? 1 : -1;
}

int64_t totient(int64_t m) {
  if (m < 1) throw std::invalid_argument("totient: argument must be positive");
  int64_t result = m;
  for (int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

DivisorList divisors(int64_t value) {
  if (value < 1) throw std::invalid_argument("divisors: argument must be positive");
  DivisorList out;
  out.value = value;
  std::vector<int64_t> high;
  for (int64_t d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      out.divisors.push_back(d);
      if (d != value / d) high.push_back(value / d);
    }
  }
  out.divisors.insert(out.divisors.end(), high.rbegin(), high.rend());
  return out;
}

int64_t checked_pow(int64_t base, int exp) {
  if (base < 0 || exp < 0) throw std::invalid_argument("checked_pow: negative input");
  int64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result))
      throw std::overflow_error("checked_pow: result exceeds 64-bit range");
  }
  return result;
}

int64_t count_aperiodic(int sigma, int64_t n) {
  if (sigma < 1) throw std::invalid_argument("count_aperiodic: sigma must be positive");
  if (n < 1) throw std::invalid_argument("count_aperiodic: alphabet size must be positive");
  checked_pow(n, sigma);  // reject anything outside the exact envelope up front
  int64_t total = 0;
  for (int64_t d : divisors(sigma).divisors) {
    const int64_t term = checked_pow(n, static_cast<int>(d)) * mobius(sigma / d);
    if (__builtin_add_overflow(total, term, &total))
      throw std::overflow_error("count_aperiodic: sum exceeds 64-bit range");
  }
  return total;
}

}  // namespace cadec
