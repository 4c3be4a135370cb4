#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <vector>

#include "cadec/ring_word.hpp"

namespace cadec {

// An r-neighbor, n-state rule realized lazily. The output for a window is
// a pure function of (seed, window): a keyed 64-bit hash reduced to
// {0,...,n-1} by rejection sampling, so there is no modulo bias and the
// realized outputs are uniform and independent across windows. Memoization
// is an optimization only; a rule can be re-instantiated from (n, r, seed)
// and will agree on every window. pin() installs explicit overrides for
// constructing rules with prescribed assignments.
//
// A LazyRule mutates its memo table on read, so an instance belongs to one
// thread at a time. Cross-sample parallelism uses one rule per sample.
class LazyRule {
 public:
  LazyRule(int n, int r, uint64_t seed);

  int n() const { return n_; }
  int r() const { return r_; }
  uint64_t seed() const { return seed_; }

  // Validates the window (length r, every state < n).
  state_t apply(std::span<const state_t> window);
  state_t apply(std::initializer_list<int> window);

  // Hot path used by the graph builders; the caller guarantees the code
  // encodes a valid window.
  state_t apply_code(uint64_t window_code);

  // Prescribes f(window) = output. Throws std::logic_error if the window
  // was already realized with a different value, preserving the contract
  // that a window, once queried, never changes.
  void pin(std::initializer_list<int> window, int output);

 private:
  int n_;
  int r_;
  uint64_t seed_;
  bool use_flat_;
  std::vector<int32_t> flat_;  // -1 = unrealized
  std::unordered_map<uint64_t, state_t> sparse_;

  state_t realize(uint64_t window_code) const;
};

// Spec-facing free function; identical to rule.apply(window).
inline state_t rule_apply(LazyRule& rule, std::span<const state_t> window) {
  return rule.apply(window);
}

}  // namespace cadec
