#pragma once

#include <cstdint>
#include <vector>

#include "cadec/dec.hpp"
#include "cadec/rng.hpp"

namespace cadec {

// Counter state of the sequential cemetery construction. One step makes
// one active cemetery vertex passive and absorbs a binomial number of
// non-cemetery vertices, so resolved + non_cemetery + active is conserved
// and non_cemetery + active drops by exactly one per step.
struct Algo1State {
  int64_t non_cemetery = 0;  // Y_k
  int64_t active = 0;        // Z_k
  int64_t resolved = 0;      // passive cemetery vertices so far
  int64_t step = 0;          // k
  int64_t total = 0;         // N, conserved
  bool v0_pending = false;   // the exceptional vertex is processed first
  double v0_prob = 0.0;      // iota / n^sigma
};

// Initial counters for spatial period sigma over an n-letter alphabet.
// Needs the exact class counts but never enumerates words, so it works
// far beyond the vertex-set cap.
Algo1State algo1_init(int n, int sigma);

// One transition; returns false once no active cemetery vertex remains.
bool algo1_step(Algo1State& state, RngStream& rng);

// Runs the construction to completion; the returned non_cemetery count is
// distributed as the number of non-cemetery vertices of a random DEC.
CemeteryCount sample_c_algorithm1(int n, int sigma, RngStream& rng);

// Euler-Maruyama draw of the scaled non-cemetery proportion: integrates
// d eta = -eta/(1-t) dt + dB from eta(0) = 1/sqrt(sigma) (0 for odd
// sigma) on a grid of step dt and returns 1 - tau, where tau is the first
// grid time with eta <= 0; paths that never hit by t = 1 - dt return dt.
// Requires 0 < dt <= 1e-3.
double simulate_eta(int sigma, double dt, RngStream& rng);

// Density of the first zero of a Brownian bridge started at a > 0 and
// pinned to 0 at time 1:   a / sqrt(2 pi x^3 (1-x)) * exp(-a^2(1-x)/(2x))
// on 0 < x < 1. Evaluated in log space; extreme tails underflow to 0.
double density_hitting_time(double a, double x);

// Limit density of the non-cemetery proportion C/N for even sigma:
//   1 / sqrt(2 sigma pi x (1-x)^3) * exp(-x / (2 sigma (1-x))).
// Identical to density_hitting_time(1/sqrt(sigma), 1-x). Odd sigma is
// rejected: there the proportion degenerates to 1 and no density exists.
double density_c_limit(int sigma, double x);

// P(number of cyclic points of a uniform random mapping on N elements
// equals s) = (s/N) * prod_{j<s} (1 - j/N). Log-space for large N.
double pmf_cyclic_points(int64_t N, int64_t s);

// Cycle lengths of a uniform random mapping on {0..N-1}, descending.
std::vector<int64_t> sample_mapping_cycles(int64_t N, RngStream& rng);

// Cycle type of a uniform random permutation of N elements, descending;
// sums to exactly N.
std::vector<int64_t> sample_permutation_cycles(int64_t N, RngStream& rng);

// Divisor d of sigma drawn with probability phi(d)/sigma.
int64_t sample_expanding(int sigma, RngStream& rng);

// Geometric law of the first fully expanded cycle index:
// (1 - phi(sigma)/sigma)^(k-1) * phi(sigma)/sigma.
double pmf_K(int sigma, int64_t k);

// Composite draw of D_N^(k): mapping cycle lengths P^(1) >= P^(2) >= ...,
// independent proper-divisor expansions T' with weights
// phi(d)/(sigma - phi(sigma)), and max(P^(k) sigma, P^(j) T'_j for j < k).
// For sigma = 1 there are no proper divisors and the draw is P^(k) itself.
int64_t sample_longest_expanded(int64_t N, int sigma, int k, RngStream& rng);

}  // namespace cadec
