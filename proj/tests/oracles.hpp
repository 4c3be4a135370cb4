#pragma once

// Test-only oracles, deliberately independent of the library code paths
// they are used to check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

// Count length-sigma words over {0..n-1} whose minimal period is exactly
// sigma, by direct enumeration.
inline int64_t brute_force_aperiodic_count(int sigma, int64_t n) {
  int64_t total = 1;
  for (int i = 0; i < sigma; ++i) total *= n;
  int64_t count = 0;
  std::vector<int> word(sigma);
  for (int64_t code = 0; code < total; ++code) {
    int64_t c = code;
    for (int i = sigma - 1; i >= 0; --i) {
      word[i] = static_cast<int>(c % n);
      c /= n;
    }
    int period = sigma;
    for (int p = 1; p < sigma; ++p) {
      if (sigma % p != 0) continue;
      bool ok = true;
      for (int i = p; i < sigma && ok; ++i) ok = word[i] == word[i - p];
      if (ok) {
        period = p;
        break;
      }
    }
    if (period == sigma) ++count;
  }
  return count;
}

// Moebius values 1..limit via a linear sieve.
inline std::vector<int> mobius_sieve(int limit) {
  std::vector<int> mu(limit + 1, 0);
  std::vector<int> primes;
  std::vector<bool> composite(limit + 1, false);
  mu[1] = 1;
  for (int i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      const int64_t ip = static_cast<int64_t>(i) * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = -mu[i];
    }
  }
  return mu;
}

// Plain adaptive Simpson; no substitutions, no shared code with the
// library quadrature.
inline double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                        int depth = 52) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fmid, double fhi, double est, double eps,
          int d) -> double {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    const double flm = f(lmid), frm = f(rmid);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    const double delta = left + right - est;
    if (d <= 0 || std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return rec(lo, mid, flo, flm, fmid, left, eps * 0.5, d - 1) +
           rec(mid, hi, fmid, frm, fhi, right, eps * 0.5, d - 1);
  };
  return rec(a, b, fa, fm, fb, whole, tol, depth);
}

inline double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Closed-form CDF of the first zero of a Brownian bridge from a to 0 on
// [0,1], via the time change to a Brownian first-passage problem.
inline double hitting_time_cdf(double a, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 2.0 * std_normal_cdf(-a * std::sqrt((1.0 - x) / x));
}

// Closed-form CDF of 1 - tau for the bridge started at 1/sqrt(sigma).
inline double c_limit_cdf(int sigma, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = 1.0 / std::sqrt(static_cast<double>(sigma));
  return 2.0 * std_normal_cdf(a * std::sqrt(x / (1.0 - x))) - 1.0;
}

inline double harmonic(int64_t n) {
  double h = 0.0;
  for (int64_t k = 1; k <= n; ++k) h += 1.0 / static_cast<double>(k);
  return h;
}

}  // namespace oracles
