#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cadec/ring_word.hpp"

namespace cadec {

// Class-level machinery scans all n^sigma words once and then works per
// equivalence class, so it affords a larger cap than the brute-force
// orbit oracle.
inline constexpr int64_t kVertexEnumerationCap = 16'000'000;

struct CanonicalRotation {
  RingWord canonical;  // lexicographically least rotation
  int shift = 0;       // smallest ell with rotate_left(word, ell) == canonical
};

CanonicalRotation canonical_rotation(const RingWord& word);

// Code-level canonical form: smallest encoding over all rotations, with
// the smallest achieving shift written to *shift_out when non-null.
uint64_t canonical_code(std::span<const state_t> states, int64_t n, int* shift_out);

// Order of rotation-by-ell acting on aperiodic words of length sigma:
// sigma / gcd(sigma, ell mod sigma).
int shift_order(int64_t ell, int sigma);

struct ClassId {
  RingWord canonical;
  bool aperiodic = true;
  int32_t id = 0;
};

// Partition of all n^sigma ring words into aperiodic rotation classes,
// grouped periodic vertices of sigma words each, and the leftover vertex
// v0 of iota < sigma period-1 words. Vertex ids are dense: aperiodic
// classes occupy [0, aperiodic_count) ordered by ascending canonical word,
// then the periodic groups, then v0 last when it exists. Immutable after
// construction and safe to share across threads.
class VertexSet {
 public:
  static VertexSet build(int n, int sigma);

  int n() const { return n_; }
  int sigma() const { return sigma_; }
  int64_t word_count() const { return word_count_; }
  int32_t aperiodic_count() const { return static_cast<int32_t>(canonical_codes_.size()); }
  int32_t periodic_group_count() const { return static_cast<int32_t>(periodic_groups_.size()); }
  int iota() const { return static_cast<int>(v0_words_.size()); }
  bool has_v0() const { return !v0_words_.empty(); }
  int64_t total_vertices() const;
  int32_t v0_id() const;

  int32_t vertex_of_code(uint64_t code) const { return vertex_of_[code]; }
  int32_t class_of(const RingWord& word) const;
  bool is_aperiodic(int32_t vertex_id) const { return vertex_id < aperiodic_count(); }

  uint32_t canonical_code_of(int32_t aperiodic_id) const { return canonical_codes_[aperiodic_id]; }
  ClassId aperiodic_class(int32_t aperiodic_id) const;

  const std::vector<std::vector<uint32_t>>& periodic_groups() const { return periodic_groups_; }
  const std::vector<uint32_t>& v0_words() const { return v0_words_; }

  // Rebuilds the partition with an explicit periodic grouping over the
  // same words (group sizes sigma, v0 size iota). Cemetery counts and the
  // cycle structure of any DEC must not depend on this choice; tests use
  // it to assert exactly that.
  VertexSet with_periodic_grouping(std::vector<std::vector<uint32_t>> groups,
                                   std::vector<uint32_t> v0) const;

 private:
  int n_ = 1;
  int sigma_ = 1;
  int64_t word_count_ = 1;
  std::vector<uint32_t> canonical_codes_;
  std::vector<std::vector<uint32_t>> periodic_groups_;
  std::vector<uint32_t> v0_words_;
  std::vector<int32_t> vertex_of_;  // word code -> vertex id

  void index_periodic();
};

inline VertexSet build_vertex_set(int n, int sigma) { return VertexSet::build(n, sigma); }

inline int32_t class_of(const RingWord& word, const VertexSet& vs) { return vs.class_of(word); }

}  // namespace cadec
