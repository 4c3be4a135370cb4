#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cadec {

using state_t = uint16_t;

// One spatial period of a cyclically extended configuration. Index
// arithmetic is modulo length everywhere it is consumed.
struct RingWord {
  int n = 2;                    // alphabet size; every state is < n
  std::vector<state_t> states;  // length >= 1

  int length() const { return static_cast<int>(states.size()); }
  bool operator==(const RingWord&) const = default;
};

// Builds a word from decimal digits, e.g. word_from_string(3, "012").
// Only meant for alphabets up to 10; validates every digit against n.
RingWord word_from_string(int n, std::string_view digits);

std::string to_string(const RingWord& w);

// result[i] = w[(i + ell) mod length]; ell may be any integer.
RingWord rotate_left(const RingWord& w, int64_t ell);

// Smallest divisor p of the length such that the word is p-periodic.
int min_period(const RingWord& w);
int min_period_span(std::span<const state_t> states);

// Base-n encoding with states[0] as the most significant digit, so the
// numeric order of codes coincides with lexicographic word order.
uint64_t encode_word(const RingWord& w);
uint64_t encode_span(std::span<const state_t> states, int64_t n);
RingWord decode_word(int n, int sigma, uint64_t code);
void decode_into(uint64_t code, int64_t n, int sigma, state_t* out);

}  // namespace cadec
