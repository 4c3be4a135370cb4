// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Every tolerance is pinned here, together with the seeds
// that make the statistical checks reproducible.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cadec/ca.hpp"
#include "cadec/dec.hpp"
#include "cadec/experiment.hpp"
#include "cadec/numtheory.hpp"
#include "cadec/rng.hpp"
#include "cadec/stats.hpp"
#include "cadec/stochastic.hpp"

using namespace cadec;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string description)
      : number_(number), description_(std::move(description)), start_(clock_now()) {}

  void finish(bool pass, const std::string& detail) {
    const double seconds =
        std::chrono::duration<double>(clock_now() - start_).count();
    std::printf("%s  criterion %2d: %s [%s] (%.1fs)\n", pass ? "PASS" : "FAIL", number_,
                description_.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
  }

 private:
  static std::chrono::steady_clock::time_point clock_now() {
    return std::chrono::steady_clock::now();
  }
  int number_;
  std::string description_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(const char* pattern, ...) {
  char buf[256];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

int64_t brute_force_aperiodic(int sigma, int64_t n) {
  int64_t total = 1;
  for (int i = 0; i < sigma; ++i) total *= n;
  int64_t count = 0;
  for (int64_t code = 0; code < total; ++code) {
    const RingWord w = decode_word(static_cast<int>(n), sigma, static_cast<uint64_t>(code));
    if (min_period(w) == sigma) ++count;
  }
  return count;
}

void criterion_1_necklace_counts() {
  Criterion c(1, "count_aperiodic equals brute-force enumeration for sigma <= 5, n <= 8");
  bool pass = true;
  for (int sigma = 1; sigma <= 5 && pass; ++sigma)
    for (int64_t n = 1; n <= 8 && pass; ++n)
      pass = count_aperiodic(sigma, n) == brute_force_aperiodic(sigma, n);
  c.finish(pass, pass ? "40/40 exact" : "mismatch found");
}

void criterion_2_pinned_tile() {
  Criterion c(2, "pinned five-assignment rule reproduces the period-6 tile");
  LazyRule rule(3, 2, 7);
  rule.pin({2, 0}, 1);
  rule.pin({1, 2}, 1);
  rule.pin({1, 1}, 1);
  rule.pin({1, 0}, 2);
  rule.pin({0, 1}, 0);

  const std::vector<std::string> expected = {"012", "101", "120", "011", "201", "110"};
  bool rows_ok = true;
  RingWord w = word_from_string(3, "012");
  for (const std::string& row : expected) {
    rows_ok = rows_ok && to_string(w) == row;
    w = evolve_ring(rule, w);
  }
  rows_ok = rows_ok && to_string(w) == "012";  // wrapped around

  const PeriodResult res = temporal_period(rule, word_from_string(3, "012"), 10);
  const bool period_ok =
      std::holds_alternative<Period>(res) && std::get<Period>(res).tau == 6;
  c.finish(rows_ok && period_ok, rows_ok && period_ok ? "6 rows exact, Period(6)" : "mismatch");
}

void criterion_3_oracle_equivalence() {
  Criterion c(3, "DEC longest period equals brute force (200 seeds s=2, 100 seeds s=3)");
  RngStream seeds(0xACCE97, 0);
  int matches = 0, total = 0;

  std::vector<std::shared_ptr<const VertexSet>> vs2(6), vs3(5);
  for (int n = 1; n <= 5; ++n) vs2[n] = std::make_shared<const VertexSet>(VertexSet::build(n, 2));
  for (int n = 1; n <= 4; ++n) vs3[n] = std::make_shared<const VertexSet>(VertexSet::build(n, 3));

  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 5;
    const uint64_t seed = seeds.next_u64();
    LazyRule graph_rule(n, 2, seed), brute_rule(n, 2, seed);
    DecGraph g = build_dec(graph_rule, vs2[n]);
    matches += longest_period(g) == brute_force_longest_period(brute_rule, 2);
    ++total;
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 4;
    const uint64_t seed = seeds.next_u64();
    LazyRule graph_rule(n, 3, seed), brute_rule(n, 3, seed);
    DecGraph g = build_dec(graph_rule, vs3[n]);
    matches += longest_period(g) == brute_force_longest_period(brute_rule, 3);
    ++total;
  }
  c.finish(matches == total, fmt("%d/%d exact", matches, total));
}

void criterion_4_edge_law() {
  Criterion c(4, "arc probabilities at n=5, sigma=r=2 within 4 standard errors");
  auto vs = std::make_shared<const VertexSet>(VertexSet::build(5, 2));
  const int32_t u = vs->class_of(word_from_string(5, "01"));
  const int32_t fixed_v = vs->class_of(word_from_string(5, "02"));
  const int32_t v0 = vs->v0_id();

  const int trials = 100000;
  RngStream seeds(0xED6E, 0);
  int hit_v = 0, hit_v0 = 0;
  std::vector<state_t> buf(2), out(2);
  for (int i = 0; i < trials; ++i) {
    LazyRule rule(5, 2, seeds.next_u64());
    decode_into(vs->canonical_code_of(u), 5, 2, buf.data());
    evolve_span(rule, buf, out.data());
    const int32_t succ = vs->vertex_of_code(encode_span(out, 5));
    hit_v += succ == fixed_v;
    hit_v0 += succ == v0;
  }
  const double p_v = 2.0 / 25.0, p_v0 = 1.0 / 25.0;
  const double dev_v = std::fabs(hit_v / double(trials) - p_v) / std::sqrt(p_v * (1 - p_v) / trials);
  const double dev_v0 =
      std::fabs(hit_v0 / double(trials) - p_v0) / std::sqrt(p_v0 * (1 - p_v0) / trials);
  c.finish(dev_v <= 4.0 && dev_v0 <= 4.0,
           fmt("deviations %.2f and %.2f standard errors", dev_v, dev_v0));
}

void criterion_5_expanding_law() {
  Criterion c(5, "expanding numbers at sigma=r=4, n=8 follow phi(d)/4 (chi-square, 1%)");
  ExperimentSpec spec;
  spec.kind = ExperimentKind::expanding_law;
  spec.n_values = {8};
  spec.sigma = 4;
  spec.r = 4;
  spec.samples = 4000;  // rules; roughly 3-4 cycles each
  spec.seed = 0xE89A;
  spec.workers = 2;
  const ExperimentResult result = run_experiment(spec);
  const int64_t cycles = result.summary.points.empty() ? 0 : result.summary.points[0].count;
  const double p = result.summary.chi_square ? result.summary.chi_square->p_value : 0.0;
  c.finish(cycles >= 10000 && p > 0.01, fmt("%lld cycles, p = %.4f", (long long)cycles, p));
}

void criterion_6_figure3(const fs::path& out_root) {
  Criterion c(6, "C/N histogram at sigma=r=2, n=100, 10^4 rules: KS vs limit CDF <= 0.06");
  ExperimentSpec spec;
  spec.kind = ExperimentKind::cemetery_histogram;
  spec.n_values = {100};
  spec.sigma = 2;
  spec.r = 2;
  spec.samples = 10000;
  spec.seed = 0xF163;
  spec.workers = 2;
  spec.output_dir = out_root / "figure3";
  const ExperimentResult result = run_experiment(spec);
  const double ks = result.summary.ks_statistic.value_or(1.0);
  c.finish(ks <= 0.06, fmt("ks = %.4f", ks));
}

void criterion_7_algo1_fidelity() {
  Criterion c(7, "algorithm-1 vs full DEC at n=30, sigma=r=2: two-sample KS p > 0.01");
  ExperimentSpec spec;
  spec.kind = ExperimentKind::algo1_vs_dec;
  spec.n_values = {30};
  spec.sigma = 2;
  spec.r = 2;
  spec.samples = 2000;
  spec.seed = 0xA161;
  spec.workers = 2;
  const ExperimentResult result = run_experiment(spec);
  const double p = result.summary.ks_p_value.value_or(0.0);
  c.finish(p > 0.01, fmt("D = %.4f, p = %.4f", result.summary.ks_statistic.value_or(1.0), p));
}

void criterion_8_sde_vs_closed_form() {
  Criterion c(8, "10^4 Euler-Maruyama paths at sigma=2, dt=1e-4: KS vs limit CDF <= 0.05");
  ExperimentSpec spec;
  spec.kind = ExperimentKind::eta_vs_density;
  spec.sigma = 2;
  spec.samples = 10000;
  spec.dt = 1e-4;
  spec.seed = 0x5DE5;
  spec.workers = 2;
  const ExperimentResult result = run_experiment(spec);
  const double ks = result.summary.ks_statistic.value_or(1.0);
  c.finish(ks <= 0.05, fmt("ks = %.4f", ks));
}

// Mean of 1 - tau_a for the bridge-hitting law, i.e. the limit-theory
// prediction for mean C/N when the scaled active-cemetery start is a.
double limit_mean_c_over_n(double a) {
  return adaptive_simpson(
      [&](double u) {
        const double x = 1.0 - u * u;  // substitution regularizes the x -> 1 end
        return x <= 0.0 || x >= 1.0 ? 0.0
                                    : (1.0 - x) * density_hitting_time(a, x) * 2.0 * u;
      },
      0.0, 1.0, 1e-10);
}

void criterion_9_odd_sigma() {
  Criterion c(9, "odd sigma degeneracy: mean C/N >= 0.95 at sigma=r=3, n=30, 500 rules");
  auto mean_at = [](int n, int64_t samples) {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::cemetery_histogram;
    spec.n_values = {n};
    spec.sigma = 3;
    spec.r = 3;
    spec.samples = samples;
    spec.seed = 0x0DD5;
    spec.workers = 2;
    return run_experiment(spec).summary.points[0].mean;
  };
  auto theory_at = [](int n) {
    const double total = std::pow(static_cast<double>(n), 3.0) / 3.0;
    return limit_mean_c_over_n((n / 3.0) / std::sqrt(total));
  };
  const double mean = mean_at(30, 500);
  c.finish(mean >= 0.95, fmt("mean C/N = %.4f; limit law at this scale predicts %.4f", mean,
                             theory_at(30)));
  // Not part of the criterion: the same statistic where the n^{-1/2}
  // degeneracy rate has caught up with the 0.95 threshold.
  const double far_mean = mean_at(210, 200);
  std::printf("      criterion  9 diagnostic: n=210 gives mean C/N = %.4f (limit law %.4f); "
              "the stated threshold is reached near n ~ 210, not at n = 30\n",
              far_mean, theory_at(210));
  std::fflush(stdout);
}

void criterion_10_scaling(const fs::path& out_root) {
  Criterion c(10, "log-log slope of mean X: sigma=1 in [0.4,0.6], sigma=2 in [0.9,1.1]");
  auto sweep = [&](int sigma, uint64_t seed, const char* dir) {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::longest_period_scaling;
    for (int n = 5; n <= 100; n += 5) spec.n_values.push_back(n);
    spec.sigma = sigma;
    spec.r = 2;
    spec.samples = 1000;
    spec.seed = seed;
    spec.workers = 2;
    spec.output_dir = out_root / dir;
    return run_experiment(spec);
  };
  const ExperimentResult r1 = sweep(1, 0x5CA1E1, "scaling_sigma1");
  const ExperimentResult r2 = sweep(2, 0x5CA1E2, "scaling_sigma2");
  const double s1 = r1.summary.fit ? r1.summary.fit->slope : -1.0;
  const double s2 = r2.summary.fit ? r2.summary.fit->slope : -1.0;
  const bool pass = s1 >= 0.4 && s1 <= 0.6 && s2 >= 0.9 && s2 <= 1.1;
  c.finish(pass, fmt("slope(sigma=1) = %.3f, slope(sigma=2) = %.3f", s1, s2));
}

void criterion_11_mapping_law() {
  Criterion c(11, "cyclic-point count at N=100 follows its pmf; pmf sums to 1");
  bool sums_ok = true;
  for (int64_t N : {int64_t{10}, int64_t{100}, int64_t{1000}}) {
    double sum = 0.0;
    for (int64_t s = 1; s <= N; ++s) sum += pmf_cyclic_points(N, s);
    sums_ok = sums_ok && std::fabs(sum - 1.0) <= 1e-12;
  }
  ExperimentSpec spec;
  spec.kind = ExperimentKind::mapping_stats;
  spec.n_values = {100};
  spec.samples = 100000;
  spec.seed = 0x3A1;
  spec.workers = 2;
  const ExperimentResult result = run_experiment(spec);
  const double p = result.summary.chi_square ? result.summary.chi_square->p_value : 0.0;
  c.finish(sums_ok && p > 0.01, fmt("p = %.4f, sums %s", p, sums_ok ? "exact" : "off"));
}

void criterion_12_conjecture_mode(const fs::path& out_root) {
  Criterion c(12, "sigma > r experiments emit well-formed, normalized histograms");
  bool pass = true;
  std::string detail;
  for (int sigma : {3, 4}) {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::cemetery_histogram;
    spec.n_values = {50};
    spec.sigma = sigma;
    spec.r = 2;
    spec.samples = 1000;
    spec.seed = 0xF16400 + sigma;
    spec.workers = 2;
    spec.output_dir = out_root / ("figure4_sigma" + std::to_string(sigma));
    run_experiment(spec);

    std::ifstream json_in(spec.output_dir / "summary.json");
    nlohmann::json j;
    const bool parsed = static_cast<bool>(json_in) && (json_in >> j, json_in.good());
    double mass = 0.0;
    bool has_hist = parsed && j.contains("histogram");
    if (has_hist)
      for (double m : j["histogram"]["masses"]) mass += m;
    bool conjecture_noted = false;
    if (parsed)
      for (const auto& note : j["notes"])
        conjecture_noted =
            conjecture_noted || note.get<std::string>().find("conjecture") != std::string::npos;
    std::ifstream svg_in(spec.output_dir / "plot.svg");
    std::ifstream csv_in(spec.output_dir / "raw_samples.csv");
    int64_t rows = -1;
    std::string line;
    while (std::getline(csv_in, line)) ++rows;  // minus the header

    const bool this_ok = parsed && has_hist && std::fabs(mass - 1.0) <= 1e-12 &&
                         conjecture_noted && svg_in.good() && rows == 1000;
    pass = pass && this_ok;
    detail += fmt("sigma=%d %s ", sigma, this_ok ? "ok" : "BAD");
  }
  c.finish(pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path out_root = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
  std::printf("acceptance suite; file outputs under %s\n", out_root.string().c_str());

  criterion_1_necklace_counts();
  criterion_2_pinned_tile();
  criterion_3_oracle_equivalence();
  criterion_4_edge_law();
  criterion_5_expanding_law();
  criterion_6_figure3(out_root);
  criterion_7_algo1_fidelity();
  criterion_8_sde_vs_closed_form();
  criterion_9_odd_sigma();
  criterion_10_scaling(out_root);
  criterion_11_mapping_law();
  criterion_12_conjecture_mode(out_root);

  if (g_failures == 0) {
    std::printf("all 12 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
