#pragma once

#include <cstdint>
#include <variant>

#include "cadec/ring_word.hpp"
#include "cadec/rule.hpp"

namespace cadec {

// Direct enumeration is the oracle path; it simulates orbits word by word,
// so it gets a tighter cap than the class-based graph machinery.
inline constexpr int64_t kBruteForceCap = 2'000'000;

// One synchronous update of a ring word: output[i] = f applied to the
// window of r states ending at i, read from the periodic extension.
RingWord evolve_ring(LazyRule& rule, const RingWord& word);

// Same, on raw buffers; used by the graph builders.
void evolve_span(LazyRule& rule, std::span<const state_t> in, state_t* out);

struct Period {
  int64_t tau = 0;
  bool operator==(const Period&) const = default;
};
struct CemeteryHit {
  int64_t step = 0;
  RingWord reduced;
  bool operator==(const CemeteryHit&) const = default;
};
struct Exceeded {
  int64_t bound = 0;
  bool operator==(const Exceeded&) const = default;
};
using PeriodResult = std::variant<Period, CemeteryHit, Exceeded>;

// Pigeonhole bound on distinct ring states: n^sigma.
int64_t default_max_steps(int n, int sigma);

// First recurrence time of `start` if it recurs within max_steps with no
// intermediate word of smaller minimal period; CemeteryHit at the first
// step whose image has minimal period below that of `start`; Exceeded
// otherwise.
PeriodResult temporal_period(LazyRule& rule, const RingWord& start, int64_t max_steps);

// Longest temporal period over all aperiodic start words whose orbit
// returns to the start without ever reducing the spatial period; 0 when
// no such orbit exists. Enumerates all n^sigma words (<= kBruteForceCap).
int64_t brute_force_longest_period(LazyRule& rule, int sigma);

}  // namespace cadec
