#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cadec/necklace.hpp"
#include "cadec/rule.hpp"

namespace cadec {

// Functional digraph on aperiodic classes induced by one rule update.
// Every aperiodic vertex has exactly one successor; periodic-type vertices
// are absorbing sinks with no out-arcs. edge_shift records the rotation
// aligning the evolved canonical word to the successor's canonical form,
// which is all that is needed to recover temporal periods from cycles.
//
// Construction mutates the graph, so building is single-threaded per
// graph; a completed DecGraph is immutable and shareable.
struct DecGraph {
  std::shared_ptr<const VertexSet> vs;
  std::vector<int32_t> successor;    // aperiodic id -> vertex id
  std::vector<int16_t> edge_shift;   // aperiodic id -> rotation in [0, sigma)
  std::vector<uint8_t> cemetery;     // 1 = orbit reaches a periodic-type vertex
  bool cemetery_marked = false;
};

struct CemeteryCount {
  int64_t non_cemetery = 0;  // C
  int64_t total = 0;         // N, all vertices including periodic groups and v0
};

DecGraph build_dec(LazyRule& rule, std::shared_ptr<const VertexSet> vs);
DecGraph build_dec(LazyRule& rule, int sigma);

// Resolves every aperiodic vertex exactly once by iterative orbit walking
// with a three-state memo; an orbit closing on itself is a cycle, hence
// non-cemetery. Idempotent; returns (C, N).
CemeteryCount mark_cemetery(DecGraph& g);

struct CycleRecord {
  std::vector<int32_t> vertices;  // successor order around the cycle
  int64_t length = 0;
  int net_shift = 0;   // sum of edge shifts around the cycle, mod sigma
  int expanding = 1;   // shift_order(net_shift, sigma); divides sigma
  int64_t period = 0;  // length * expanding
};

// All cycles of the functional graph restricted to non-cemetery vertices,
// sorted by length descending. Requires cemetery marks.
std::vector<CycleRecord> find_cycles(const DecGraph& g);

// max over cycles of length * expanding; 0 when no cycle exists.
int64_t longest_period(const DecGraph& g);

// The multiset of cycle periods sorted descending, truncated or padded
// with zeros to exactly `count` entries.
std::vector<int64_t> period_spectrum(const DecGraph& g, int count);

}  // namespace cadec
