#include "cadec/necklace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cadec/numtheory.hpp"

namespace cadec {

uint64_t canonical_code(std::span<const state_t> states, int64_t n, int* shift_out) {
  const int sigma = static_cast<int>(states.size());
  uint64_t best = encode_span(states, n);
  int best_shift = 0;
  for (int shift = 1; shift < sigma; ++shift) {
    uint64_t code = 0;
    for (int i = 0; i < sigma; ++i)
      code = code * static_cast<uint64_t>(n) + states[(i + shift) % sigma];
    if (code < best) {
      best = code;
      best_shift = shift;
    }
  }
  if (shift_out) *shift_out = best_shift;
  return best;
}

CanonicalRotation canonical_rotation(const RingWord& word) {
  int shift = 0;
  const uint64_t code = canonical_code(word.states, word.n, &shift);
  return {decode_word(word.n, word.length(), code), shift};
}

int shift_order(int64_t ell, int sigma) {
  if (sigma < 1) throw std::invalid_argument("shift_order: sigma must be positive");
  int64_t e = ell % sigma;
  if (e < 0) e += sigma;
  return static_cast<int>(sigma / std::gcd(static_cast<int64_t>(sigma), e));
}

VertexSet VertexSet::build(int n, int sigma) {
  if (n < 1) throw std::invalid_argument("build_vertex_set: alphabet size must be positive");
  if (sigma < 1) throw std::invalid_argument("build_vertex_set: sigma must be positive");
  const int64_t words = checked_pow(n, sigma);
  if (words > kVertexEnumerationCap)
    throw std::invalid_argument("build_vertex_set: n^sigma = " + std::to_string(words) +
                                " exceeds the enumeration cap " +
                                std::to_string(kVertexEnumerationCap) + " (n = " +
                                std::to_string(n) + ", sigma = " + std::to_string(sigma) + ")");

  VertexSet vs;
  vs.n_ = n;
  vs.sigma_ = sigma;
  vs.word_count_ = words;
  vs.vertex_of_.assign(static_cast<size_t>(words), -1);

  // Single ascending scan. A word is its class representative exactly when
  // it equals its own canonical rotation, so aperiodic class ids come out
  // sorted by canonical word. Periodic words are bucketed by minimal period.
  std::map<int, std::vector<uint32_t>> periodic_by_period;
  std::vector<state_t> buf(static_cast<size_t>(sigma));
  for (int64_t code = 0; code < words; ++code) {
    decode_into(static_cast<uint64_t>(code), n, sigma, buf.data());
    const int period = min_period_span(buf);
    if (period == sigma) {
      const uint64_t canon = canonical_code(buf, n, nullptr);
      if (canon == static_cast<uint64_t>(code)) {
        vs.vertex_of_[code] = static_cast<int32_t>(vs.canonical_codes_.size());
        vs.canonical_codes_.push_back(static_cast<uint32_t>(code));
      } else {
        vs.vertex_of_[code] = vs.vertex_of_[canon];  // canon < code, already assigned
      }
    } else {
      periodic_by_period[period].push_back(static_cast<uint32_t>(code));
    }
  }

  // Group periodic words into vertices of exactly sigma words: for each
  // proper period > 1 in increasing order, chunk its words in ascending
  // order and pad the final partial chunk with period-1 words; then chunk
  // the remaining period-1 words, whose leftover (iota < sigma) forms v0.
  std::vector<uint32_t> ones;
  if (auto it = periodic_by_period.find(1); it != periodic_by_period.end())
    ones = std::move(it->second);
  size_t ones_used = 0;
  for (const auto& [period, group_words] : periodic_by_period) {
    if (period == 1) continue;
    for (size_t pos = 0; pos < group_words.size(); pos += sigma) {
      std::vector<uint32_t> group(group_words.begin() + pos,
                                  group_words.begin() + std::min(pos + sigma, group_words.size()));
      while (static_cast<int>(group.size()) < sigma) {
        if (ones_used >= ones.size())
          throw std::runtime_error(
              "build_vertex_set: periodic grouping infeasible at n = " + std::to_string(n) +
              ", sigma = " + std::to_string(sigma) +
              ": not enough period-1 configurations to pad a period-" + std::to_string(period) +
              " group");
        group.push_back(ones[ones_used++]);
      }
      vs.periodic_groups_.push_back(std::move(group));
    }
  }
  while (ones.size() - ones_used >= static_cast<size_t>(sigma)) {
    vs.periodic_groups_.emplace_back(ones.begin() + ones_used, ones.begin() + ones_used + sigma);
    ones_used += sigma;
  }
  vs.v0_words_.assign(ones.begin() + ones_used, ones.end());

  const int64_t aperiodic_words = count_aperiodic(sigma, n);
  const int64_t expected_iota = (words - aperiodic_words) % sigma;
  if (static_cast<int64_t>(vs.v0_words_.size()) != expected_iota ||
      static_cast<int64_t>(vs.canonical_codes_.size()) * sigma != aperiodic_words)
    throw std::logic_error("build_vertex_set: partition counts disagree with the divisor sum");

  vs.index_periodic();
  return vs;
}

void VertexSet::index_periodic() {
  const int32_t base = aperiodic_count();
  for (int32_t g = 0; g < periodic_group_count(); ++g)
    for (uint32_t code : periodic_groups_[g]) vertex_of_[code] = base + g;
  if (has_v0())
    for (uint32_t code : v0_words_) vertex_of_[code] = base + periodic_group_count();
}

int64_t VertexSet::total_vertices() const {
  return aperiodic_count() + periodic_group_count() + (has_v0() ? 1 : 0);
}

int32_t VertexSet::v0_id() const {
  if (!has_v0()) throw std::logic_error("VertexSet: v0 does not exist (iota = 0)");
  return aperiodic_count() + periodic_group_count();
}

int32_t VertexSet::class_of(const RingWord& word) const {
  if (word.n != n_ || word.length() != sigma_)
    throw std::invalid_argument("class_of: word shape does not match the vertex set");
  return vertex_of_[encode_word(word)];
}

ClassId VertexSet::aperiodic_class(int32_t aperiodic_id) const {
  if (aperiodic_id < 0 || aperiodic_id >= aperiodic_count())
    throw std::out_of_range("aperiodic_class: id outside [0, aperiodic_count)");
  return {decode_word(n_, sigma_, canonical_codes_[aperiodic_id]), true, aperiodic_id};
}

VertexSet VertexSet::with_periodic_grouping(std::vector<std::vector<uint32_t>> groups,
                                            std::vector<uint32_t> v0) const {
  std::vector<uint32_t> original;
  for (const auto& g : periodic_groups_) original.insert(original.end(), g.begin(), g.end());
  original.insert(original.end(), v0_words_.begin(), v0_words_.end());

  std::vector<uint32_t> replacement;
  for (const auto& g : groups) {
    if (static_cast<int>(g.size()) != sigma_)
      throw std::invalid_argument("with_periodic_grouping: every group must hold sigma words");
    replacement.insert(replacement.end(), g.begin(), g.end());
  }
  if (v0.size() != v0_words_.size())
    throw std::invalid_argument("with_periodic_grouping: v0 size must stay iota");
  replacement.insert(replacement.end(), v0.begin(), v0.end());

  std::sort(original.begin(), original.end());
  std::vector<uint32_t> sorted_replacement = replacement;
  std::sort(sorted_replacement.begin(), sorted_replacement.end());
  if (original != sorted_replacement)
    throw std::invalid_argument("with_periodic_grouping: word multiset changed");

  VertexSet vs = *this;
  vs.periodic_groups_ = std::move(groups);
  vs.v0_words_ = std::move(v0);
  vs.index_periodic();
  return vs;
}

}  // namespace cadec
