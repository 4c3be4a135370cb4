#include "cadec/ring_word.hpp"

#include <stdexcept>

namespace cadec {

RingWord word_from_string(int n, std::string_view digits) {
  if (n < 1) throw std::invalid_argument("word_from_string: alphabet size must be positive");
  if (digits.empty()) throw std::invalid_argument("word_from_string: empty word");
  RingWord w;
  w.n = n;
  w.states.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("word_from_string: non-digit character");
    const int v = c - '0';
    if (v >= n) throw std::invalid_argument("word_from_string: digit outside alphabet");
    w.states.push_back(static_cast<state_t>(v));
  }
  return w;
}

std::string to_string(const RingWord& w) {
  std::string out;
  for (size_t i = 0; i < w.states.size(); ++i) {
    if (w.n > 10 && i > 0) out += '.';
    out += std::to_string(w.states[i]);
  }
  return out;
}

RingWord rotate_left(const RingWord& w, int64_t ell) {
  const int len = w.length();
  RingWord out;
  out.n = w.n;
  out.states.resize(len);
  int64_t shift = ell % len;
  if (shift < 0) shift += len;
  for (int i = 0; i < len; ++i) out.states[i] = w.states[(i + shift) % len];
  return out;
}

int min_period_span(std::span<const state_t> states) {
  const int len = static_cast<int>(states.size());
  for (int p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool ok = true;
    for (int i = p; i < len && ok; ++i) ok = states[i] == states[i - p];
    if (ok) return p;
  }
  return len;
}

int min_period(const RingWord& w) { return min_period_span(w.states); }

uint64_t encode_span(std::span<const state_t> states, int64_t n) {
  uint64_t code = 0;
  for (state_t s : states) code = code * static_cast<uint64_t>(n) + s;
  return code;
}

uint64_t encode_word(const RingWord& w) { return encode_span(w.states, w.n); }

void decode_into(uint64_t code, int64_t n, int sigma, state_t* out) {
  for (int i = sigma - 1; i >= 0; --i) {
    out[i] = static_cast<state_t>(code % static_cast<uint64_t>(n));
    code /= static_cast<uint64_t>(n);
  }
}

RingWord decode_word(int n, int sigma, uint64_t code) {
  RingWord w;
  w.n = n;
  w.states.resize(sigma);
  decode_into(code, n, sigma, w.states.data());
  return w;
}

}  // namespace cadec
