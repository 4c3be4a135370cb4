#include "cadec/ca.hpp"

#include <stdexcept>
#include <string>

#include "cadec/numtheory.hpp"

namespace cadec {

void evolve_span(LazyRule& rule, std::span<const state_t> in, state_t* out) {
  const int sigma = static_cast<int>(in.size());
  const int r = rule.r();
  const int64_t n = rule.n();
  for (int i = 0; i < sigma; ++i) {
    uint64_t code = 0;
    for (int j = r - 1; j >= 0; --j) {
      int idx = (i - j) % sigma;
      if (idx < 0) idx += sigma;
      code = code * static_cast<uint64_t>(n) + in[idx];
    }
    out[i] = rule.apply_code(code);
  }
}

RingWord evolve_ring(LazyRule& rule, const RingWord& word) {
  if (word.n != rule.n())
    throw std::invalid_argument("evolve_ring: word and rule alphabet sizes differ");
  if (word.length() < 1) throw std::invalid_argument("evolve_ring: empty word");
  for (state_t s : word.states)
    if (s >= word.n) throw std::invalid_argument("evolve_ring: state outside alphabet");
  RingWord out;
  out.n = word.n;
  out.states.resize(word.states.size());
  evolve_span(rule, word.states, out.states.data());
  return out;
}

int64_t default_max_steps(int n, int sigma) { return checked_pow(n, sigma); }

PeriodResult temporal_period(LazyRule& rule, const RingWord& start, int64_t max_steps) {
  if (max_steps < 1) throw std::invalid_argument("temporal_period: max_steps must be positive");
  const int base_period = min_period(start);
  RingWord current = start;
  for (int64_t step = 1; step <= max_steps; ++step) {
    current = evolve_ring(rule, current);
    if (current == start) return Period{step};
    if (min_period(current) < base_period) return CemeteryHit{step, current};
  }
  return Exceeded{max_steps};
}

int64_t brute_force_longest_period(LazyRule& rule, int sigma) {
  if (sigma < 1) throw std::invalid_argument("brute_force_longest_period: sigma must be positive");
  const int64_t words = checked_pow(rule.n(), sigma);
  if (words > kBruteForceCap)
    throw std::invalid_argument("brute_force_longest_period: n^sigma = " + std::to_string(words) +
                                " exceeds the enumeration cap " + std::to_string(kBruteForceCap));
  int64_t best = 0;
  for (int64_t code = 0; code < words; ++code) {
    RingWord w = decode_word(rule.n(), sigma, static_cast<uint64_t>(code));
    if (min_period(w) != sigma) continue;  // only aperiodic starts define a PS
    const PeriodResult result = temporal_period(rule, w, words);
    if (const auto* period = std::get_if<Period>(&result))
      if (period->tau > best) best = period->tau;
  }
  return best;
}

}  // namespace cadec
