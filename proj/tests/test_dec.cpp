#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "cadec/ca.hpp"
#include "cadec/dec.hpp"
#include "cadec/rng.hpp"

using namespace cadec;

namespace {

// A 2-neighbor 5-state rule whose sigma=2 class digraph has ten aperiodic
// classes, the two periodic groups {00,11} and {22,33}, and v0 = {44}:
//   {01,10} self-loop, {02,20} -> {01,10},
//   {23,32} -> {24,42} -> {34,43} -> {23,32}   (a 3-cycle),
//   {04,40} -> {03,30} -> {22,33},
//   {12,21} -> {13,31} <- {14,41},  {13,31} -> {44}.
// With six_realization the 3-cycle accumulates net shift 1 and expands to
// a period-6 solution; otherwise it closes with net shift 0 and period 3.
LazyRule figure_rule(bool six_realization, uint64_t seed = 0) {
  LazyRule rule(5, 2, seed);
  rule.pin({1, 0}, 1);
  rule.pin({0, 1}, 0);  // 01 -> 10, the expanding self-loop
  rule.pin({2, 0}, 0);
  rule.pin({0, 2}, 1);  // 02 -> 01
  rule.pin({3, 2}, 2);
  rule.pin({2, 3}, 4);  // 23 -> 24
  rule.pin({4, 2}, 4);
  rule.pin({2, 4}, 3);  // 24 -> 43
  if (six_realization) {
    rule.pin({4, 3}, 2);
    rule.pin({3, 4}, 3);  // 34 -> 23
  } else {
    rule.pin({4, 3}, 3);
    rule.pin({3, 4}, 2);  // 34 -> 32
  }
  rule.pin({4, 0}, 0);
  rule.pin({0, 4}, 3);  // 04 -> 03
  rule.pin({3, 0}, 2);
  rule.pin({0, 3}, 2);  // 03 -> 22
  rule.pin({2, 1}, 1);
  rule.pin({1, 2}, 3);  // 12 -> 13
  rule.pin({4, 1}, 1);
  rule.pin({1, 4}, 3);  // 14 -> 13
  rule.pin({3, 1}, 4);
  rule.pin({1, 3}, 4);  // 13 -> 44
  return rule;
}

}  // namespace

TEST_CASE("build_dec reproduces the worked digraph") {
  LazyRule rule = figure_rule(true);
  auto vs = std::make_shared<const VertexSet>(VertexSet::build(5, 2));
  const DecGraph g = build_dec(rule, vs);

  auto id = [&](const char* word) { return vs->class_of(word_from_string(5, word)); };
  CHECK(g.successor[id("01")] == id("01"));  // self-loop
  CHECK(g.successor[id("02")] == id("01"));
  CHECK(g.successor[id("23")] == id("24"));
  CHECK(g.successor[id("24")] == id("34"));
  CHECK(g.successor[id("34")] == id("23"));
  CHECK(g.successor[id("04")] == id("03"));
  CHECK(g.successor[id("03")] == vs->class_of(word_from_string(5, "22")));
  CHECK(g.successor[id("12")] == id("13"));
  CHECK(g.successor[id("14")] == id("13"));
  CHECK(g.successor[id("13")] == vs->v0_id());
}

TEST_CASE("mark_cemetery counts five non-cemetery classes of thirteen vertices") {
  LazyRule rule = figure_rule(true);
  DecGraph g = build_dec(rule, 2);
  const CemeteryCount c = mark_cemetery(g);
  CHECK(c.non_cemetery == 5);
  CHECK(c.total == 13);
  auto vs = g.vs;
  for (const char* live : {"01", "02", "23", "24", "34"})
    CHECK_FALSE(g.cemetery[vs->class_of(word_from_string(5, live))]);
  for (const char* dead : {"03", "04", "12", "13", "14"})
    CHECK(g.cemetery[vs->class_of(word_from_string(5, dead))]);
}

TEST_CASE("find_cycles: two cycles of lengths 3 and 1") {
  LazyRule rule = figure_rule(true);
  DecGraph g = build_dec(rule, 2);
  const auto cycles = find_cycles(g);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].length == 3);
  CHECK(cycles[1].length == 1);

  // the 3-cycle closes with one unaligned arc: expanding number 2, period 6
  CHECK(cycles[0].net_shift == 1);
  CHECK(cycles[0].expanding == 2);
  CHECK(cycles[0].period == 6);

  // self-loop 01 -> 10 has edge shift 1: expanding number 2, period 2
  CHECK(cycles[1].net_shift == 1);
  CHECK(cycles[1].expanding == 2);
  CHECK(cycles[1].period == 2);
}

TEST_CASE("the other realization of the same cycle has period 3") {
  LazyRule rule = figure_rule(false);
  DecGraph g = build_dec(rule, 2);
  const auto cycles = find_cycles(g);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].length == 3);
  CHECK(cycles[0].net_shift == 0);
  CHECK(cycles[0].expanding == 1);
  CHECK(cycles[0].period == 3);
  CHECK(longest_period(g) == 3);
}

TEST_CASE("longest_period and period_spectrum") {
  LazyRule rule = figure_rule(true);
  DecGraph g = build_dec(rule, 2);
  CHECK(longest_period(g) == 6);
  CHECK(period_spectrum(g, 2) == std::vector<int64_t>{6, 2});
  CHECK(period_spectrum(g, 5) == std::vector<int64_t>{6, 2, 0, 0, 0});
  CHECK(period_spectrum(g, 1) == std::vector<int64_t>{longest_period(g)});
  CHECK_THROWS_AS(period_spectrum(g, 0), std::invalid_argument);
}

TEST_CASE("direct simulation confirms every cycle's expanded period") {
  for (bool six : {true, false}) {
    LazyRule rule = figure_rule(six);
    DecGraph g = build_dec(rule, 2);
    for (const CycleRecord& cycle : find_cycles(g)) {
      LazyRule replay = figure_rule(six);
      const RingWord start = g.vs->aperiodic_class(cycle.vertices.front()).canonical;
      const PeriodResult res = temporal_period(replay, start, 100);
      REQUIRE(std::holds_alternative<Period>(res));
      CHECK(std::get<Period>(res).tau == cycle.period);
    }
  }
}

TEST_CASE("direct simulation matches cycle periods for random rules") {
  RngStream seeds(5150, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(seeds.below(3));
    const int sigma = 2 + static_cast<int>(seeds.below(2));
    const uint64_t seed = seeds.next_u64();
    LazyRule rule(n, sigma, seed);
    DecGraph g = build_dec(rule, sigma);
    for (const CycleRecord& cycle : find_cycles(g)) {
      LazyRule replay(n, sigma, seed);
      const RingWord start = g.vs->aperiodic_class(cycle.vertices.front()).canonical;
      const PeriodResult res = temporal_period(replay, start, default_max_steps(n, sigma) * sigma);
      REQUIRE(std::holds_alternative<Period>(res));
      CHECK(std::get<Period>(res).tau == cycle.period);
    }
  }
}

TEST_CASE("graph longest period equals brute force on pinned seeds") {
  RngStream seeds(31337, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(seeds.below(4));  // 2..5
    const uint64_t seed = seeds.next_u64();
    LazyRule graph_rule(n, 2, seed);
    LazyRule brute_rule(n, 2, seed);
    DecGraph g = build_dec(graph_rule, 2);
    CHECK(longest_period(g) == brute_force_longest_period(brute_rule, 2));
  }
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(seeds.below(3));  // 2..4
    const uint64_t seed = seeds.next_u64();
    LazyRule graph_rule(n, 3, seed);
    LazyRule brute_rule(n, 3, seed);
    DecGraph g = build_dec(graph_rule, 3);
    CHECK(longest_period(g) == brute_force_longest_period(brute_rule, 3));
  }
}

TEST_CASE("cemetery marks agree with direct orbit simulation") {
  // After n^sigma steps an orbit has either produced a smaller-period word
  // or entered a cycle of aperiodic words, so temporal_period is an exact
  // cemetery oracle.
  RngStream seeds(8086, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(seeds.below(4));
    const int sigma = 2 + static_cast<int>(seeds.below(2));
    const uint64_t seed = seeds.next_u64();
    LazyRule rule(n, 2, seed);
    DecGraph g = build_dec(rule, sigma);
    int64_t live = 0;
    for (int32_t id = 0; id < g.vs->aperiodic_count(); ++id) {
      LazyRule replay(n, 2, seed);
      const PeriodResult res =
          temporal_period(replay, g.vs->aperiodic_class(id).canonical, default_max_steps(n, sigma));
      const bool orbit_collapses = std::holds_alternative<CemeteryHit>(res);
      CHECK(orbit_collapses == static_cast<bool>(g.cemetery[id]));
      live += !orbit_collapses;
    }
    CHECK(mark_cemetery(g).non_cemetery == live);
  }
}

TEST_CASE("n=1 gives an empty aperiodic graph for sigma >= 2") {
  LazyRule rule(1, 2, 0);
  DecGraph g = build_dec(rule, 2);
  const CemeteryCount c = mark_cemetery(g);
  CHECK(c.non_cemetery == 0);
  CHECK(c.total == 1);
  CHECK(find_cycles(g).empty());
  CHECK(longest_period(g) == 0);
}

TEST_CASE("cemetery counts and cycles ignore the periodic grouping") {
  RngStream seeds(616, 0);
  auto base = std::make_shared<const VertexSet>(VertexSet::build(4, 4));

  // reshuffle all periodic words into fresh groups with a fixed stream
  std::vector<uint32_t> pool;
  for (const auto& group : base->periodic_groups()) pool.insert(pool.end(), group.begin(), group.end());
  pool.insert(pool.end(), base->v0_words().begin(), base->v0_words().end());
  RngStream shuffler(99, 0);
  for (size_t i = pool.size(); i > 1; --i)
    std::swap(pool[i - 1], pool[shuffler.below(i)]);
  std::vector<std::vector<uint32_t>> groups;
  size_t pos = 0;
  for (int32_t gidx = 0; gidx < base->periodic_group_count(); ++gidx) {
    groups.emplace_back(pool.begin() + pos, pool.begin() + pos + 4);
    pos += 4;
  }
  std::vector<uint32_t> v0(pool.begin() + pos, pool.end());
  auto permuted = std::make_shared<const VertexSet>(base->with_periodic_grouping(groups, v0));

  for (int trial = 0; trial < 25; ++trial) {
    const uint64_t seed = seeds.next_u64();
    LazyRule rule_a(4, 4, seed);
    LazyRule rule_b(4, 4, seed);
    DecGraph ga = build_dec(rule_a, base);
    DecGraph gb = build_dec(rule_b, permuted);
    const CemeteryCount ca = mark_cemetery(ga);
    const CemeteryCount cb = mark_cemetery(gb);
    CHECK(ca.non_cemetery == cb.non_cemetery);
    CHECK(ca.total == cb.total);

    auto cycles_a = find_cycles(ga);
    auto cycles_b = find_cycles(gb);
    REQUIRE(cycles_a.size() == cycles_b.size());
    auto signature = [](std::vector<CycleRecord> cycles) {
      std::vector<std::pair<std::vector<int32_t>, int64_t>> sig;
      for (auto& c : cycles) {
        std::sort(c.vertices.begin(), c.vertices.end());
        sig.emplace_back(c.vertices, c.period);
      }
      std::sort(sig.begin(), sig.end());
      return sig;
    };
    CHECK(signature(cycles_a) == signature(cycles_b));
  }
}

TEST_CASE("edge law smoke test at n=5, sigma=r=2") {
  // P(successor of {01,10} is a fixed non-v0 vertex) = 2/25, and 1/25 for
  // v0; 2*10^4 pinned seeds, 4 standard errors.
  auto vs = std::make_shared<const VertexSet>(VertexSet::build(5, 2));
  const int32_t u = vs->class_of(word_from_string(5, "01"));
  const int32_t target = vs->class_of(word_from_string(5, "02"));
  const int32_t group = vs->class_of(word_from_string(5, "00"));
  const int32_t v0 = vs->v0_id();
  const int trials = 20000;
  int hit_target = 0, hit_group = 0, hit_v0 = 0;
  RngStream seeds(271828, 0);
  std::vector<state_t> buf(2), out(2);
  for (int i = 0; i < trials; ++i) {
    LazyRule rule(5, 2, seeds.next_u64());
    decode_into(vs->canonical_code_of(u), 5, 2, buf.data());
    evolve_span(rule, buf, out.data());
    const int32_t succ = vs->vertex_of_code(encode_span(out, 5));
    hit_target += succ == target;
    hit_group += succ == group;
    hit_v0 += succ == v0;
  }
  auto within = [&](int hits, double p, double se_mult) {
    const double se = std::sqrt(p * (1.0 - p) / trials);
    return std::fabs(static_cast<double>(hits) / trials - p) <= se_mult * se;
  };
  CHECK(within(hit_target, 2.0 / 25.0, 4.0));
  CHECK(within(hit_group, 2.0 / 25.0, 4.0));
  CHECK(within(hit_v0, 1.0 / 25.0, 4.0));
}

TEST_CASE("find_cycles requires cemetery marks") {
  LazyRule rule = figure_rule(true);
  auto vs = std::make_shared<const VertexSet>(VertexSet::build(5, 2));
  DecGraph g = build_dec(rule, vs);
  g.cemetery_marked = false;
  CHECK_THROWS_AS(find_cycles(g), std::logic_error);
}
