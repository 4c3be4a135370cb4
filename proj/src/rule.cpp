#include "cadec/rule.hpp"

#include <stdexcept>

#include "cadec/numtheory.hpp"
#include "cadec/rng.hpp"

namespace cadec {

namespace {

constexpr int64_t kFlatMemoCap = 1 << 22;  // flat table up to ~4M windows

uint64_t rule_prf(uint64_t seed, uint64_t code, uint64_t attempt) {
  uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  h = mix64(h ^ code);
  h = mix64(h ^ (attempt * 0x9e3779b97f4a7c15ULL + 1));
  return h;
}

}  // namespace

LazyRule::LazyRule(int n, int r, uint64_t seed) : n_(n), r_(r), seed_(seed) {
  if (n < 1) throw std::invalid_argument("LazyRule: alphabet size must be positive");
  if (r < 1) throw std::invalid_argument("LazyRule: neighborhood width must be positive");
  int64_t windows = 0;
  try {
    windows = checked_pow(n, r);
  } catch (const std::overflow_error&) {
    windows = 0;  // window space too large to count; use the hash map
  }
  use_flat_ = windows > 0 && windows <= kFlatMemoCap;
  if (use_flat_) flat_.assign(static_cast<size_t>(windows), -1);
}

state_t LazyRule::realize(uint64_t window_code) const {
  // Rejection sampling onto [0, n): retry attempts keep the draw unbiased.
  const uint64_t n = static_cast<uint64_t>(n_);
  const uint64_t threshold = (-n) % n;
  for (uint64_t attempt = 0;; ++attempt) {
    const uint64_t v = rule_prf(seed_, window_code, attempt);
    if (v >= threshold) return static_cast<state_t>(v % n);
  }
}

state_t LazyRule::apply_code(uint64_t window_code) {
  if (use_flat_) {
    int32_t& slot = flat_[static_cast<size_t>(window_code)];
    if (slot < 0) slot = realize(window_code);
    return static_cast<state_t>(slot);
  }
  auto [it, inserted] = sparse_.try_emplace(window_code, 0);
  if (inserted) it->second = realize(window_code);
  return it->second;
}

state_t LazyRule::apply(std::span<const state_t> window) {
  if (static_cast<int>(window.size()) != r_)
    throw std::invalid_argument("LazyRule::apply: window length differs from r");
  for (state_t s : window)
    if (s >= n_) throw std::invalid_argument("LazyRule::apply: state outside alphabet");
  return apply_code(encode_span(window, n_));
}

state_t LazyRule::apply(std::initializer_list<int> window) {
  std::vector<state_t> buf;
  buf.reserve(window.size());
  for (int v : window) {
    if (v < 0 || v >= n_) throw std::invalid_argument("LazyRule::apply: state outside alphabet");
    buf.push_back(static_cast<state_t>(v));
  }
  return apply(std::span<const state_t>(buf));
}

void LazyRule::pin(std::initializer_list<int> window, int output) {
  if (static_cast<int>(window.size()) != r_)
    throw std::invalid_argument("LazyRule::pin: window length differs from r");
  if (output < 0 || output >= n_)
    throw std::invalid_argument("LazyRule::pin: output outside alphabet");
  uint64_t code = 0;
  for (int v : window) {
    if (v < 0 || v >= n_) throw std::invalid_argument("LazyRule::pin: state outside alphabet");
    code = code * static_cast<uint64_t>(n_) + static_cast<uint64_t>(v);
  }
  if (use_flat_) {
    int32_t& slot = flat_[static_cast<size_t>(code)];
    if (slot >= 0 && slot != output)
      throw std::logic_error("LazyRule::pin: window already realized with a different value");
    slot = output;
  } else {
    auto [it, inserted] = sparse_.try_emplace(code, static_cast<state_t>(output));
    if (!inserted && it->second != output)
      throw std::logic_error("LazyRule::pin: window already realized with a different value");
    it->second = static_cast<state_t>(output);
  }
}

}  // namespace cadec
