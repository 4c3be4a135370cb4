#include "cadec/dec.hpp"

#include <algorithm>
#include <stdexcept>

#include "cadec/ca.hpp"

namespace cadec {

DecGraph build_dec(LazyRule& rule, std::shared_ptr<const VertexSet> vs) {
  if (!vs) throw std::invalid_argument("build_dec: null vertex set");
  if (rule.n() != vs->n())
    throw std::invalid_argument("build_dec: rule and vertex set alphabet sizes differ");

  DecGraph g;
  g.vs = std::move(vs);
  const int sigma = g.vs->sigma();
  const int32_t aperiodic = g.vs->aperiodic_count();
  g.successor.resize(aperiodic);
  g.edge_shift.resize(aperiodic);

  std::vector<state_t> word(static_cast<size_t>(sigma));
  std::vector<state_t> image(static_cast<size_t>(sigma));
  for (int32_t id = 0; id < aperiodic; ++id) {
    decode_into(g.vs->canonical_code_of(id), g.vs->n(), sigma, word.data());
    evolve_span(rule, word, image.data());
    int shift = 0;
    const uint64_t canon = canonical_code(image, g.vs->n(), &shift);
    g.successor[id] = g.vs->vertex_of_code(canon);
    g.edge_shift[id] = static_cast<int16_t>(shift);
  }
  mark_cemetery(g);
  return g;
}

DecGraph build_dec(LazyRule& rule, int sigma) {
  return build_dec(rule, std::make_shared<const VertexSet>(VertexSet::build(rule.n(), sigma)));
}

CemeteryCount mark_cemetery(DecGraph& g) {
  const int32_t aperiodic = g.vs->aperiodic_count();
  enum : uint8_t { kUnresolved = 0, kInProgress, kCemetery, kNonCemetery };
  std::vector<uint8_t> state(static_cast<size_t>(aperiodic), kUnresolved);
  std::vector<int32_t> path;

  for (int32_t v = 0; v < aperiodic; ++v) {
    if (state[v] != kUnresolved) continue;
    path.clear();
    int32_t u = v;
    uint8_t verdict;
    for (;;) {
      if (u >= aperiodic) {  // absorbed by a periodic-type vertex
        verdict = kCemetery;
        break;
      }
      if (state[u] == kCemetery || state[u] == kNonCemetery) {
        verdict = state[u];
        break;
      }
      if (state[u] == kInProgress) {  // closed a fresh cycle
        verdict = kNonCemetery;
        break;
      }
      state[u] = kInProgress;
      path.push_back(u);
      u = g.successor[u];
    }
    for (int32_t w : path) state[w] = verdict;
  }

  g.cemetery.assign(static_cast<size_t>(aperiodic), 0);
  int64_t non_cemetery = 0;
  for (int32_t v = 0; v < aperiodic; ++v) {
    if (state[v] == kNonCemetery)
      ++non_cemetery;
    else
      g.cemetery[v] = 1;
  }
  g.cemetery_marked = true;
  return {non_cemetery, g.vs->total_vertices()};
}

std::vector<CycleRecord> find_cycles(const DecGraph& g) {
  if (!g.cemetery_marked) throw std::logic_error("find_cycles: cemetery marks required");
  const int32_t aperiodic = g.vs->aperiodic_count();
  const int sigma = g.vs->sigma();
  std::vector<uint8_t> visited(static_cast<size_t>(aperiodic), 0);
  std::vector<int32_t> position(static_cast<size_t>(aperiodic), -1);
  std::vector<int32_t> path;
  std::vector<CycleRecord> cycles;

  for (int32_t v = 0; v < aperiodic; ++v) {
    if (visited[v] || g.cemetery[v]) continue;
    path.clear();
    int32_t u = v;
    while (!visited[u] && position[u] < 0) {
      position[u] = static_cast<int32_t>(path.size());
      path.push_back(u);
      u = g.successor[u];  // stays aperiodic and non-cemetery
    }
    if (!visited[u]) {  // u is on the current path: a new cycle
      CycleRecord rec;
      int64_t shift_sum = 0;
      for (size_t i = static_cast<size_t>(position[u]); i < path.size(); ++i) {
        rec.vertices.push_back(path[i]);
        shift_sum += g.edge_shift[path[i]];
      }
      rec.length = static_cast<int64_t>(rec.vertices.size());
      rec.net_shift = static_cast<int>(shift_sum % sigma);
      rec.expanding = shift_order(rec.net_shift, sigma);
      rec.period = rec.length * rec.expanding;
      cycles.push_back(std::move(rec));
    }
    for (int32_t w : path) {
      visited[w] = 1;
      position[w] = -1;
    }
  }

  std::stable_sort(cycles.begin(), cycles.end(), [](const CycleRecord& a, const CycleRecord& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.vertices.front() < b.vertices.front();
  });
  return cycles;
}

int64_t longest_period(const DecGraph& g) {
  int64_t best = 0;
  for (const CycleRecord& c : find_cycles(g)) best = std::max(best, c.period);
  return best;
}

std::vector<int64_t> period_spectrum(const DecGraph& g, int count) {
  if (count < 1) throw std::invalid_argument("period_spectrum: count must be positive");
  std::vector<int64_t> periods;
  for (const CycleRecord& c : find_cycles(g)) periods.push_back(c.period);
  std::sort(periods.begin(), periods.end(), std::greater<>());
  periods.resize(static_cast<size_t>(count), 0);
  return periods;
}

}  // namespace cadec
