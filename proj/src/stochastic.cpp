#include "cadec/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cadec/numtheory.hpp"

namespace cadec {

Algo1State algo1_init(int n, int sigma) {
  if (n < 1) throw std::invalid_argument("algo1_init: alphabet size must be positive");
  if (sigma < 1) throw std::invalid_argument("algo1_init: sigma must be positive");
  const int64_t words = checked_pow(n, sigma);
  const int64_t aperiodic_words = count_aperiodic(sigma, n);
  const int64_t classes = aperiodic_words / sigma;
  const int64_t full_groups = (words - aperiodic_words) / sigma;
  const int64_t iota = (words - aperiodic_words) % sigma;

  Algo1State s;
  s.non_cemetery = classes;
  s.active = full_groups + (iota > 0 ? 1 : 0);
  s.resolved = 0;
  s.step = 0;
  s.total = classes + s.active;
  s.v0_pending = iota > 0;
  s.v0_prob = static_cast<double>(iota) / static_cast<double>(words);
  return s;
}

bool algo1_step(Algo1State& s, RngStream& rng) {
  if (s.active <= 0) return false;
  int64_t absorbed;
  if (s.v0_pending) {
    // v0 goes passive first; each non-cemetery vertex maps to it with the
    // exact arc probability iota / n^sigma.
    absorbed = rng.binomial(s.non_cemetery, s.v0_prob);
    s.v0_pending = false;
  } else {
    // Remaining vertices all hold sigma words, so conditional on the
    // history every target left is equally likely: p = 1 / (Y + Z).
    absorbed = rng.binomial(s.non_cemetery,
                            1.0 / static_cast<double>(s.non_cemetery + s.active));
  }
  s.non_cemetery -= absorbed;
  s.active += absorbed - 1;
  s.resolved += 1;
  s.step += 1;
  return s.active > 0;
}

CemeteryCount sample_c_algorithm1(int n, int sigma, RngStream& rng) {
  Algo1State s = algo1_init(n, sigma);
  while (algo1_step(s, rng)) {
  }
  return {s.non_cemetery, s.total};
}

double simulate_eta(int sigma, double dt, RngStream& rng) {
  if (sigma < 1) throw std::invalid_argument("simulate_eta: sigma must be positive");
  if (!(dt > 0.0) || dt > 1e-3)
    throw std::invalid_argument("simulate_eta: dt must lie in (0, 1e-3]");
  double eta = (sigma % 2 == 0) ? 1.0 / std::sqrt(static_cast<double>(sigma)) : 0.0;
  const int64_t steps = static_cast<int64_t>(std::llround(1.0 / dt));
  const double sqrt_dt = std::sqrt(dt);
  for (int64_t k = 0; k < steps; ++k) {  // grid times 0, dt, ..., 1 - dt
    const double t = static_cast<double>(k) * dt;
    if (eta <= 0.0) return 1.0 - t;
    if (k + 1 == steps) break;  // the drift is singular past 1 - dt
    eta += -eta / (1.0 - t) * dt + sqrt_dt * rng.normal();
  }
  return dt;  // no grid hit; the bridge is pinned to 0 at t = 1 anyway
}

double density_hitting_time(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("density_hitting_time: a must be positive");
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("density_hitting_time: x must lie in (0, 1)");
  const double log_g = std::log(a) -
                       0.5 * (std::log(2.0 * M_PI) + 3.0 * std::log(x) + std::log1p(-x)) -
                       a * a * (1.0 - x) / (2.0 * x);
  return log_g < -745.0 ? 0.0 : std::exp(log_g);
}

double density_c_limit(int sigma, double x) {
  if (sigma < 1) throw std::invalid_argument("density_c_limit: sigma must be positive");
  if (sigma % 2 != 0)
    throw std::invalid_argument(
        "density_c_limit: odd sigma has a degenerate limit (the proportion tends to 1 in "
        "probability); no density exists");
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("density_c_limit: x must lie in (0, 1)");
  const double log_g = -0.5 * (std::log(2.0 * sigma * M_PI) + std::log(x) + 3.0 * std::log1p(-x)) -
                       x / (2.0 * sigma * (1.0 - x));
  return log_g < -745.0 ? 0.0 : std::exp(log_g);
}

double pmf_cyclic_points(int64_t N, int64_t s) {
  if (N < 1) throw std::invalid_argument("pmf_cyclic_points: N must be positive");
  if (s < 1 || s > N) throw std::invalid_argument("pmf_cyclic_points: s must lie in [1, N]");
  if (N <= 1000) {
    double p = static_cast<double>(s) / static_cast<double>(N);
    for (int64_t j = 1; j < s; ++j) p *= 1.0 - static_cast<double>(j) / static_cast<double>(N);
    return p;
  }
  double log_p = std::log(static_cast<double>(s)) - std::log(static_cast<double>(N));
  for (int64_t j = 1; j < s; ++j)
    log_p += std::log1p(-static_cast<double>(j) / static_cast<double>(N));
  return log_p < -745.0 ? 0.0 : std::exp(log_p);
}

std::vector<int64_t> sample_mapping_cycles(int64_t N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_mapping_cycles: N must be positive");
  std::vector<int64_t> map(static_cast<size_t>(N));
  for (auto& target : map) target = static_cast<int64_t>(rng.below(static_cast<uint64_t>(N)));

  std::vector<int64_t> lengths;
  std::vector<int32_t> walk_id(static_cast<size_t>(N), -1);
  std::vector<int32_t> position(static_cast<size_t>(N), 0);
  for (int64_t start = 0; start < N; ++start) {
    if (walk_id[start] >= 0) continue;
    int64_t u = start;
    int32_t steps = 0;
    while (walk_id[u] < 0) {
      walk_id[u] = static_cast<int32_t>(start);
      position[u] = steps++;
      u = map[u];
    }
    if (walk_id[u] == static_cast<int32_t>(start)) lengths.push_back(steps - position[u]);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::vector<int64_t> sample_permutation_cycles(int64_t N, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_permutation_cycles: N must be positive");
  std::vector<int64_t> perm(static_cast<size_t>(N));
  for (int64_t i = 0; i < N; ++i) perm[i] = i;
  for (int64_t i = N - 1; i > 0; --i) {  // Fisher-Yates
    const int64_t j = static_cast<int64_t>(rng.below(static_cast<uint64_t>(i + 1)));
    std::swap(perm[i], perm[j]);
  }
  std::vector<int64_t> lengths;
  std::vector<uint8_t> visited(static_cast<size_t>(N), 0);
  for (int64_t start = 0; start < N; ++start) {
    if (visited[start]) continue;
    int64_t len = 0;
    for (int64_t u = start; !visited[u]; u = perm[u]) {
      visited[u] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int64_t sample_expanding(int sigma, RngStream& rng) {
  if (sigma < 1) throw std::invalid_argument("sample_expanding: sigma must be positive");
  // Integer weights phi(d) sum to sigma exactly, so a single uniform draw
  // below sigma selects with the exact law.
  const int64_t u = static_cast<int64_t>(rng.below(static_cast<uint64_t>(sigma)));
  int64_t cumulative = 0;
  for (int64_t d : divisors(sigma).divisors) {
    cumulative += totient(d);
    if (u < cumulative) return d;
  }
  return sigma;  // unreachable: the weights exhaust [0, sigma)
}

double pmf_K(int sigma, int64_t k) {
  if (sigma < 1) throw std::invalid_argument("pmf_K: sigma must be positive");
  if (k < 1) throw std::invalid_argument("pmf_K: k must be positive");
  const double success =
      static_cast<double>(totient(sigma)) / static_cast<double>(sigma);
  return std::pow(1.0 - success, static_cast<double>(k - 1)) * success;
}

int64_t sample_longest_expanded(int64_t N, int sigma, int k, RngStream& rng) {
  if (k < 1) throw std::invalid_argument("sample_longest_expanded: k must be positive");
  const std::vector<int64_t> cycles = sample_mapping_cycles(N, rng);
  auto cycle_length = [&](int j) {
    return j <= static_cast<int>(cycles.size()) ? cycles[j - 1] : 0;
  };
  if (sigma == 1) return cycle_length(k);

  const int64_t phi_sigma = totient(sigma);
  const int64_t proper_total = sigma - phi_sigma;  // sum of phi over proper divisors
  auto draw_proper = [&]() {
    const int64_t u = static_cast<int64_t>(rng.below(static_cast<uint64_t>(proper_total)));
    int64_t cumulative = 0;
    for (int64_t d : divisors(sigma).divisors) {
      if (d == sigma) break;
      cumulative += totient(d);
      if (u < cumulative) return d;
    }
    return static_cast<int64_t>(1);
  };

  int64_t best = cycle_length(k) * sigma;
  for (int j = 1; j < k; ++j) best = std::max(best, cycle_length(j) * draw_proper());
  return best;
}

}  // namespace cadec
