#include "cadec/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cadec/ca.hpp"
#include "cadec/dec.hpp"
#include "cadec/numtheory.hpp"
#include "cadec/rng.hpp"
#include "cadec/stochastic.hpp"
#include "cadec/svg.hpp"

namespace cadec {

namespace {

void parallel_samples(int64_t count, int workers, const std::function<void(int64_t)>& body) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = static_cast<int>(std::min<int64_t>(workers, count));
  if (workers <= 1) {
    for (int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex error_mutex;
  std::exception_ptr first_error;
  for (int w = 0; w < workers; ++w) {
    const int64_t begin = count * w / workers;
    const int64_t end = count * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        for (int64_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// The per-sample stream; a rule seed is its first draw.
uint64_t rule_seed_for(uint64_t seed, int64_t sample_index) {
  return RngStream(seed, static_cast<uint64_t>(sample_index)).next_u64();
}

void check_enumeration_cap(int n, int sigma) {
  int64_t words = 0;
  try {
    words = checked_pow(n, sigma);
  } catch (const std::overflow_error&) {
    words = kVertexEnumerationCap + 1;
  }
  if (words > kVertexEnumerationCap)
    throw std::invalid_argument("experiment: n^sigma exceeds the enumeration cap " +
                                std::to_string(kVertexEnumerationCap) + " at n = " +
                                std::to_string(n) + ", sigma = " + std::to_string(sigma));
}

std::vector<std::pair<double, double>> density_curve(int sigma, int points = 512) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(points);
  for (int k = 1; k <= points; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(points + 1);
    curve.emplace_back(x, density_c_limit(sigma, x));
  }
  return curve;
}

PointStats point_from(const std::string& label, double n_value,
                      const std::vector<double>& values) {
  const MeanVariance mv = mean_variance(values);
  return {label, n_value, mv.count, mv.mean, mv.variance};
}

SummaryStats summary_skeleton(const ExperimentSpec& spec, int effective_workers) {
  SummaryStats s;
  s.kind = to_string(spec.kind);
  s.n_values = spec.n_values;
  s.sigma = spec.sigma;
  s.r = spec.r;
  s.samples = spec.samples;
  s.seed = spec.seed;
  s.workers = effective_workers;
  s.bins = spec.bins;
  s.dt = spec.dt;
  return s;
}

ExperimentResult run_cemetery_histogram(const ExperimentSpec& spec, int workers) {
  const int n = spec.n_values.front();
  check_enumeration_cap(n, spec.sigma);
  auto vs = std::make_shared<const VertexSet>(VertexSet::build(n, spec.sigma));

  std::vector<double> values(static_cast<size_t>(spec.samples));
  parallel_samples(spec.samples, workers, [&](int64_t i) {
    LazyRule rule(n, spec.r, rule_seed_for(spec.seed, i));
    DecGraph g = build_dec(rule, vs);
    const CemeteryCount c = mark_cemetery(g);
    values[i] = static_cast<double>(c.non_cemetery) / static_cast<double>(c.total);
  });

  ExperimentResult result;
  result.summary = summary_skeleton(spec, workers);
  result.summary.points.push_back(point_from("C/N", n, values));
  result.summary.histogram = make_histogram(values, 0.0, 1.0, spec.bins);
  if (spec.sigma % 2 == 0 && spec.sigma <= spec.r) {
    const GridCdf cdf = GridCdf::from_density(
        [&](double x) { return density_c_limit(spec.sigma, x); });
    result.summary.ks_statistic = ks_statistic(values, [&](double x) { return cdf(x); });
    result.reference_curve = density_curve(spec.sigma);
    result.summary.notes.push_back(
        "ks_statistic compares the empirical C/N against the closed-form limit density");
  } else if (spec.sigma > spec.r) {
    result.summary.notes.push_back(
        "sigma > r: arcs of the class digraph are dependent; conjecture regime, "
        "no reference density overlaid");
  }
  if (spec.sigma % 2 == 1)
    result.summary.notes.push_back(
        "odd sigma: the non-cemetery proportion tends to 1, no limit density exists");
  result.raw.reserve(values.size());
  for (size_t i = 0; i < values.size(); ++i)
    result.raw.push_back({static_cast<int64_t>(i), values[i], -1});
  return result;
}

ExperimentResult run_scaling(const ExperimentSpec& spec, int workers) {
  for (int n : spec.n_values) check_enumeration_cap(n, spec.sigma);
  std::vector<std::shared_ptr<const VertexSet>> vertex_sets;
  vertex_sets.reserve(spec.n_values.size());
  for (int n : spec.n_values)
    vertex_sets.push_back(std::make_shared<const VertexSet>(VertexSet::build(n, spec.sigma)));

  const int64_t points = static_cast<int64_t>(spec.n_values.size());
  const int64_t total = points * spec.samples;
  std::vector<double> values(static_cast<size_t>(total));
  parallel_samples(total, workers, [&](int64_t idx) {
    const int64_t point = idx / spec.samples;
    LazyRule rule(spec.n_values[point], spec.r, rule_seed_for(spec.seed, idx));
    DecGraph g = build_dec(rule, vertex_sets[point]);
    values[idx] = static_cast<double>(longest_period(g));
  });

  ExperimentResult result;
  result.summary = summary_skeleton(spec, workers);
  std::vector<std::pair<double, double>> means;
  bool all_positive = true;
  for (int64_t point = 0; point < points; ++point) {
    const std::vector<double> slice(values.begin() + point * spec.samples,
                                    values.begin() + (point + 1) * spec.samples);
    PointStats ps =
        point_from("n=" + std::to_string(spec.n_values[point]), spec.n_values[point], slice);
    all_positive = all_positive && ps.mean > 0.0;
    means.emplace_back(ps.n_value, ps.mean);
    result.summary.points.push_back(std::move(ps));
  }
  result.summary.notes.push_back("means include samples whose longest period is 0");
  if (points >= 3 && all_positive)
    result.summary.fit = loglog_slope(means);
  else
    result.summary.notes.push_back("log-log fit skipped: fewer than 3 points or a zero mean");

  result.raw.reserve(values.size());
  for (int64_t idx = 0; idx < total; ++idx)
    result.raw.push_back({idx, values[idx], spec.n_values[idx / spec.samples]});
  return result;
}

ExperimentResult run_algo1_vs_dec(const ExperimentSpec& spec, int workers) {
  const int n = spec.n_values.front();
  check_enumeration_cap(n, spec.sigma);
  auto vs = std::make_shared<const VertexSet>(VertexSet::build(n, spec.sigma));

  const int64_t m = spec.samples;
  std::vector<double> algo1_values(static_cast<size_t>(m));
  std::vector<double> dec_values(static_cast<size_t>(m));
  parallel_samples(2 * m, workers, [&](int64_t idx) {
    if (idx < m) {
      RngStream rng(spec.seed, static_cast<uint64_t>(idx));
      const CemeteryCount c = sample_c_algorithm1(n, spec.sigma, rng);
      algo1_values[idx] = static_cast<double>(c.non_cemetery) / static_cast<double>(c.total);
    } else {
      LazyRule rule(n, spec.r, rule_seed_for(spec.seed, idx));
      DecGraph g = build_dec(rule, vs);
      const CemeteryCount c = mark_cemetery(g);
      dec_values[idx - m] = static_cast<double>(c.non_cemetery) / static_cast<double>(c.total);
    }
  });

  ExperimentResult result;
  result.summary = summary_skeleton(spec, workers);
  result.summary.points.push_back(point_from("algo1", n, algo1_values));
  result.summary.points.push_back(point_from("dec", n, dec_values));
  const TwoSampleKs ks = two_sample_ks(algo1_values, dec_values);
  result.summary.ks_statistic = ks.statistic;
  result.summary.ks_p_value = ks.p_value;

  std::vector<double> pooled = algo1_values;
  pooled.insert(pooled.end(), dec_values.begin(), dec_values.end());
  result.summary.histogram = make_histogram(pooled, 0.0, 1.0, spec.bins);
  result.summary.notes.push_back(
      "raw_samples.csv holds the algo1 block first, then the dec block; the histogram pools "
      "both");

  result.raw.reserve(2 * m);
  for (int64_t i = 0; i < m; ++i) result.raw.push_back({i, algo1_values[i], -1});
  for (int64_t i = 0; i < m; ++i) result.raw.push_back({m + i, dec_values[i], -1});
  return result;
}

ExperimentResult run_expanding_law(const ExperimentSpec& spec, int workers) {
  const int n = spec.n_values.front();
  check_enumeration_cap(n, spec.sigma);
  auto vs = std::make_shared<const VertexSet>(VertexSet::build(n, spec.sigma));

  std::vector<std::vector<int>> per_rule(static_cast<size_t>(spec.samples));
  parallel_samples(spec.samples, workers, [&](int64_t i) {
    LazyRule rule(n, spec.r, rule_seed_for(spec.seed, i));
    DecGraph g = build_dec(rule, vs);
    for (const CycleRecord& c : find_cycles(g)) per_rule[i].push_back(c.expanding);
  });

  std::vector<double> all;
  for (const auto& ds : per_rule) all.insert(all.end(), ds.begin(), ds.end());

  ExperimentResult result;
  result.summary = summary_skeleton(spec, workers);
  if (all.empty()) {
    result.summary.notes.push_back("no cycles observed; nothing to test");
    return result;
  }
  result.summary.points.push_back(point_from("expanding", n, all));
  result.summary.histogram = make_histogram(all, 0.5, spec.sigma + 0.5, spec.sigma);

  const DivisorList divs = divisors(spec.sigma);
  std::vector<int64_t> counts(divs.divisors.size(), 0);
  std::vector<double> probs(divs.divisors.size(), 0.0);
  for (size_t k = 0; k < divs.divisors.size(); ++k) {
    probs[k] = static_cast<double>(totient(divs.divisors[k])) / static_cast<double>(spec.sigma);
    for (double d : all)
      if (static_cast<int64_t>(d) == divs.divisors[k]) ++counts[k];
  }
  result.summary.chi_square = chi_square_gof(counts, probs);
  result.summary.notes.push_back("chi-square compares cycle expanding numbers against phi(d)/sigma");

  result.raw.reserve(all.size());
  for (size_t i = 0; i < all.size(); ++i)
    result.raw.push_back({static_cast<int64_t>(i), all[i], -1});
  return result;
}

ExperimentResult run_mapping_stats(const ExperimentSpec& spec, int workers) {
  const int64_t N = spec.n_values.front();
  std::vector<double> values(static_cast<size_t>(spec.samples));
  parallel_samples(spec.samples, workers, [&](int64_t i) {
    RngStream rng(spec.seed, static_cast<uint64_t>(i));
    int64_t cyclic_points = 0;
    for (int64_t len : sample_mapping_cycles(N, rng)) cyclic_points += len;
    values[i] = static_cast<double>(cyclic_points);
  });

  ExperimentResult result;
  result.summary = summary_skeleton(spec, workers);
  result.summary.points.push_back(point_from("cyclic_points", static_cast<double>(N), values));
  result.summary.histogram =
      make_histogram(values, 0.5, static_cast<double>(N) + 0.5, static_cast<int>(N));

  std::vector<int64_t> counts(static_cast<size_t>(N), 0);
  std::vector<double> probs(static_cast<size_t>(N), 0.0);
  for (int64_t s = 1; s <= N; ++s) probs[s - 1] = pmf_cyclic_points(N, s);
  for (double v : values) ++counts[static_cast<size_t>(v) - 1];
  result.summary.chi_square = chi_square_gof(counts, probs);
  result.summary.notes.push_back(
      "chi-square compares the cyclic-point count against its exact pmf, tail bins pooled");

  result.raw.reserve(values.size());
  for (size_t i = 0; i < values.size(); ++i)
    result.raw.push_back({static_cast<int64_t>(i), values[i], -1});
  return result;
}

ExperimentResult run_eta_vs_density(const ExperimentSpec& spec, int workers) {
  std::vector<double> values(static_cast<size_t>(spec.samples));
  parallel_samples(spec.samples, workers, [&](int64_t i) {
    RngStream rng(spec.seed, static_cast<uint64_t>(i));
    values[i] = simulate_eta(spec.sigma, spec.dt, rng);
  });

  ExperimentResult result;
  result.summary = summary_skeleton(spec, workers);
  result.summary.points.push_back(point_from("1-tau", spec.sigma, values));
  result.summary.histogram = make_histogram(values, 0.0, 1.0, spec.bins);
  if (spec.sigma % 2 == 0) {
    const GridCdf cdf = GridCdf::from_density(
        [&](double x) { return density_c_limit(spec.sigma, x); });
    result.summary.ks_statistic = ks_statistic(values, [&](double x) { return cdf(x); });
    result.reference_curve = density_curve(spec.sigma);
  } else {
    result.summary.notes.push_back(
        "odd sigma starts the bridge at 0: every path returns 1, no density to compare");
  }
  result.raw.reserve(values.size());
  for (size_t i = 0; i < values.size(); ++i)
    result.raw.push_back({static_cast<int64_t>(i), values[i], -1});
  return result;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::cemetery_histogram: return "cemetery_histogram";
    case ExperimentKind::longest_period_scaling: return "longest_period_scaling";
    case ExperimentKind::algo1_vs_dec: return "algo1_vs_dec";
    case ExperimentKind::expanding_law: return "expanding_law";
    case ExperimentKind::mapping_stats: return "mapping_stats";
    case ExperimentKind::eta_vs_density: return "eta_vs_density";
  }
  return "unknown";
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.samples < 1) throw std::invalid_argument("experiment: samples must be >= 1");
  if (spec.sigma < 1) throw std::invalid_argument("experiment: sigma must be >= 1");
  if (spec.r < 1) throw std::invalid_argument("experiment: r must be >= 1");
  if (spec.bins < 1) throw std::invalid_argument("experiment: bins must be >= 1");
  const bool needs_n = spec.kind != ExperimentKind::eta_vs_density;
  if (needs_n && spec.n_values.empty())
    throw std::invalid_argument("experiment: n_values must not be empty");
  for (int n : spec.n_values)
    if (n < 1) throw std::invalid_argument("experiment: every n must be >= 1");

  int workers = spec.workers;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  ExperimentResult result;
  switch (spec.kind) {
    case ExperimentKind::cemetery_histogram: result = run_cemetery_histogram(spec, workers); break;
    case ExperimentKind::longest_period_scaling: result = run_scaling(spec, workers); break;
    case ExperimentKind::algo1_vs_dec: result = run_algo1_vs_dec(spec, workers); break;
    case ExperimentKind::expanding_law: result = run_expanding_law(spec, workers); break;
    case ExperimentKind::mapping_stats: result = run_mapping_stats(spec, workers); break;
    case ExperimentKind::eta_vs_density: result = run_eta_vs_density(spec, workers); break;
  }
  if (!spec.output_dir.empty()) emit_outputs(result, spec.output_dir);
  return result;
}

std::string summary_to_json(const SummaryStats& s) {
  nlohmann::ordered_json j;
  j["kind"] = s.kind;
  // everything that determines the sampled data; the worker count never
  // affects results and is deliberately left out so files stay
  // byte-identical across executions with different parallelism
  j["parameters"] = {{"n_values", s.n_values}, {"sigma", s.sigma}, {"r", s.r},
                     {"samples", s.samples},   {"seed", s.seed},   {"bins", s.bins},
                     {"dt", s.dt}};
  j["points"] = nlohmann::ordered_json::array();
  for (const PointStats& p : s.points)
    j["points"].push_back({{"label", p.label},
                           {"n", p.n_value},
                           {"count", p.count},
                           {"mean", p.mean},
                           {"variance", p.variance}});
  if (s.histogram) {
    j["histogram"] = {{"edges", s.histogram->edges}, {"masses", s.histogram->masses}};
  }
  if (s.ks_statistic) j["ks_statistic"] = *s.ks_statistic;
  if (s.ks_p_value) j["ks_p_value"] = *s.ks_p_value;
  if (s.chi_square)
    j["chi_square"] = {{"statistic", s.chi_square->statistic},
                       {"dof", s.chi_square->dof},
                       {"p_value", s.chi_square->p_value}};
  if (s.fit)
    j["fit"] = {{"slope", s.fit->slope},
                {"intercept", s.fit->intercept},
                {"r_squared", s.fit->r_squared}};
  j["notes"] = s.notes;
  return j.dump(2) + "\n";
}

void emit_outputs(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("emit_outputs: cannot create directory " + dir.string() + ": " +
                             ec.message());

  const bool with_n = std::any_of(result.raw.begin(), result.raw.end(),
                                  [](const RawSample& r) { return r.n >= 0; });
  {
    const auto path = dir / "raw_samples.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_outputs: cannot open " + path.string());
    out << (with_n ? "sample_index,value,n\n" : "sample_index,value\n");
    char buf[64];
    for (const RawSample& r : result.raw) {
      std::snprintf(buf, sizeof buf, "%.17g", r.value);
      out << r.index << ',' << buf;
      if (with_n) out << ',' << r.n;
      out << '\n';
    }
    if (!out) throw std::runtime_error("emit_outputs: write failed for " + path.string());
  }
  {
    const auto path = dir / "summary.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_outputs: cannot open " + path.string());
    out << summary_to_json(result.summary);
    if (!out) throw std::runtime_error("emit_outputs: write failed for " + path.string());
  }
  {
    const auto path = dir / "plot.svg";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_outputs: cannot open " + path.string());
    const std::string title = result.summary.kind;
    if (result.summary.fit) {
      std::vector<std::pair<double, double>> pts;
      for (const PointStats& p : result.summary.points) pts.emplace_back(p.n_value, p.mean);
      out << svg_loglog_plot(pts, *result.summary.fit, title, "n", "mean longest period");
    } else if (result.summary.histogram) {
      out << svg_histogram_plot(*result.summary.histogram, result.reference_curve, title, "value");
    } else {
      out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" "
             "height=\"60\"><text x=\"10\" y=\"30\" font-family=\"sans-serif\">nothing to "
             "plot</text></svg>\n";
    }
    if (!out) throw std::runtime_error("emit_outputs: write failed for " + path.string());
  }
}

}  // namespace cadec
