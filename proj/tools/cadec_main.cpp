// cadec command-line front end: Monte Carlo experiments over random
// cellular-automaton rules, single-rule inspection, closed-form limit
// densities, and the brute-force cross-check of the longest period.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cadec/ca.hpp"
#include "cadec/dec.hpp"
#include "cadec/experiment.hpp"
#include "cadec/numtheory.hpp"
#include "cadec/rng.hpp"
#include "cadec/stochastic.hpp"

namespace {

using nlohmann::ordered_json;

std::string json_escape(const std::string& text) { return nlohmann::json(text).dump(); }

void print_error_line(const std::string& code, const std::string& message) {
  std::cerr << "{\"error\":{\"code\":" << json_escape(code)
            << ",\"message\":" << json_escape(message) << "}}" << std::endl;
}

int run_dec_stats(int n, int sigma, int r, int64_t samples, uint64_t seed, int workers, int bins,
                  const std::string& out_dir) {
  cadec::ExperimentSpec spec;
  spec.kind = cadec::ExperimentKind::cemetery_histogram;
  spec.n_values = {n};
  spec.sigma = sigma;
  spec.r = r;
  spec.samples = samples;
  spec.seed = seed;
  spec.workers = workers;
  spec.bins = bins;
  spec.output_dir = out_dir;
  const auto result = cadec::run_experiment(spec);
  std::cout << "wrote " << out_dir << ": mean C/N = " << result.summary.points.front().mean;
  if (result.summary.ks_statistic) std::cout << ", ks = " << *result.summary.ks_statistic;
  std::cout << std::endl;
  return 0;
}

int run_longest_period(int n, int sigma, int r, uint64_t seed) {
  cadec::LazyRule rule(n, r, seed);
  cadec::DecGraph g = cadec::build_dec(rule, sigma);
  const cadec::CemeteryCount c = cadec::mark_cemetery(g);
  ordered_json j;
  j["n"] = n;
  j["sigma"] = sigma;
  j["r"] = r;
  j["seed"] = seed;
  j["longest_period"] = cadec::longest_period(g);
  j["non_cemetery"] = c.non_cemetery;
  j["total_vertices"] = c.total;
  j["cycles"] = ordered_json::array();
  for (const cadec::CycleRecord& cyc : cadec::find_cycles(g))
    j["cycles"].push_back({{"length", cyc.length},
                           {"net_shift", cyc.net_shift},
                           {"expanding", cyc.expanding},
                           {"period", cyc.period}});
  std::cout << j.dump(2) << std::endl;
  return 0;
}

int run_scaling(int sigma, int r, int n_min, int n_max, int n_step, int64_t samples, uint64_t seed,
                const std::string& out_dir) {
  if (n_min < 1 || n_max < n_min || n_step < 1)
    throw std::invalid_argument("scaling: need 1 <= n-min <= n-max and n-step >= 1");
  cadec::ExperimentSpec spec;
  spec.kind = cadec::ExperimentKind::longest_period_scaling;
  for (int n = n_min; n <= n_max; n += n_step) spec.n_values.push_back(n);
  spec.sigma = sigma;
  spec.r = r;
  spec.samples = samples;
  spec.seed = seed;
  spec.output_dir = out_dir;
  const auto result = cadec::run_experiment(spec);
  std::cout << "wrote " << out_dir;
  if (result.summary.fit)
    std::cout << ": slope = " << result.summary.fit->slope
              << ", R^2 = " << result.summary.fit->r_squared;
  std::cout << std::endl;
  return 0;
}

int run_algo1(int n, int sigma, int64_t samples, uint64_t seed, const std::string& out_dir) {
  cadec::ExperimentSpec spec;
  spec.kind = cadec::ExperimentKind::algo1_vs_dec;
  spec.n_values = {n};
  spec.sigma = sigma;
  spec.r = sigma;  // the comparison DEC is built in the sigma <= r regime
  spec.samples = samples;
  spec.seed = seed;
  spec.output_dir = out_dir;
  const auto result = cadec::run_experiment(spec);
  std::cout << "wrote " << out_dir << ": two-sample ks = " << *result.summary.ks_statistic
            << ", p = " << *result.summary.ks_p_value << std::endl;
  return 0;
}

int run_theory_density(const std::string& kind, double a, int sigma, int grid) {
  if (grid < 1) throw std::invalid_argument("theory density: grid must be >= 1");
  std::printf("x,density\n");
  for (int k = 1; k <= grid; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(grid + 1);
    const double y =
        kind == "hitting" ? cadec::density_hitting_time(a, x) : cadec::density_c_limit(sigma, x);
    std::printf("%.17g,%.17g\n", x, y);
  }
  return 0;
}

int run_oracle_compare(int n_max, int sigma, int r, int rules, uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("oracle compare-x: n-max must be >= 1");
  bool all_equal = true;
  for (int n = 1; n <= n_max; ++n) {
    const int64_t words = cadec::checked_pow(n, sigma);
    if (words > cadec::kBruteForceCap) {
      std::cout << "n=" << n << ": skipped (n^sigma above the brute-force cap)" << std::endl;
      continue;
    }
    auto vs = std::make_shared<const cadec::VertexSet>(cadec::VertexSet::build(n, sigma));
    int matches = 0;
    for (int i = 0; i < rules; ++i) {
      const uint64_t rule_seed =
          cadec::mix64(seed ^ cadec::mix64(static_cast<uint64_t>(n) << 32 | static_cast<uint64_t>(i)));
      cadec::LazyRule dec_rule(n, r, rule_seed);
      cadec::DecGraph g = cadec::build_dec(dec_rule, vs);
      cadec::LazyRule brute_rule(n, r, rule_seed);
      const int64_t via_dec = cadec::longest_period(g);
      const int64_t via_brute = cadec::brute_force_longest_period(brute_rule, sigma);
      if (via_dec == via_brute) ++matches;
    }
    std::cout << "n=" << n << ": " << matches << "/" << rules << " rules match" << std::endl;
    all_equal = all_equal && matches == rules;
  }
  std::cout << (all_equal ? "PASS" : "FAIL") << std::endl;
  return all_equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random cellular automata: periodic solutions and class-digraph statistics"};
  app.require_subcommand(1);

  auto* dec_stats = app.add_subcommand("dec-stats", "sample C/N over random rules, emit files");
  int ds_n = 100, ds_sigma = 2, ds_r = 2, ds_workers = 0, ds_bins = 50;
  int64_t ds_samples = 10000;
  uint64_t ds_seed = 0;
  std::string ds_out;
  dec_stats->add_option("--n", ds_n, "alphabet size")->required();
  dec_stats->add_option("--sigma", ds_sigma, "spatial period")->required();
  dec_stats->add_option("--r", ds_r, "neighborhood width")->required();
  dec_stats->add_option("--samples", ds_samples, "number of rules")->required();
  dec_stats->add_option("--seed", ds_seed, "master seed")->required();
  dec_stats->add_option("--workers", ds_workers, "worker threads (default: hardware)");
  dec_stats->add_option("--bins", ds_bins, "histogram bins (default 50)");
  dec_stats->add_option("--out", ds_out, "output directory")->required();

  auto* lp = app.add_subcommand("longest-period", "single-rule longest period and cycle table");
  int lp_n = 5, lp_sigma = 2, lp_r = 2;
  uint64_t lp_seed = 0;
  lp->add_option("--n", lp_n, "alphabet size")->required();
  lp->add_option("--sigma", lp_sigma, "spatial period")->required();
  lp->add_option("--r", lp_r, "neighborhood width")->required();
  lp->add_option("--seed", lp_seed, "rule seed")->required();

  auto* sc = app.add_subcommand("scaling", "mean longest period over an n sweep, log-log fit");
  int sc_sigma = 1, sc_r = 2, sc_nmin = 5, sc_nmax = 100, sc_nstep = 5;
  int64_t sc_samples = 1000;
  uint64_t sc_seed = 0;
  std::string sc_out;
  sc->add_option("--sigma", sc_sigma, "spatial period")->required();
  sc->add_option("--r", sc_r, "neighborhood width")->required();
  sc->add_option("--n-min", sc_nmin, "smallest alphabet size")->required();
  sc->add_option("--n-max", sc_nmax, "largest alphabet size")->required();
  sc->add_option("--n-step", sc_nstep, "alphabet size step")->required();
  sc->add_option("--samples", sc_samples, "rules per point")->required();
  sc->add_option("--seed", sc_seed, "master seed")->required();
  sc->add_option("--out", sc_out, "output directory")->required();

  auto* a1 = app.add_subcommand("algo1", "counter construction of C vs full DEC, two-sample KS");
  int a1_n = 30, a1_sigma = 2;
  int64_t a1_samples = 2000;
  uint64_t a1_seed = 0;
  std::string a1_out;
  a1->add_option("--n", a1_n, "alphabet size")->required();
  a1->add_option("--sigma", a1_sigma, "spatial period")->required();
  a1->add_option("--samples", a1_samples, "samples per side")->required();
  a1->add_option("--seed", a1_seed, "master seed")->required();
  a1->add_option("--out", a1_out, "output directory")->required();

  auto* theory = app.add_subcommand("theory", "closed-form reference quantities");
  theory->require_subcommand(1);
  auto* density = theory->add_subcommand("density", "tabulate a limit density as CSV");
  std::string td_kind;
  double td_a = 1.0;
  int td_sigma = 2, td_grid = 512;
  density->add_option("--kind", td_kind, "hitting or c-limit")
      ->required()
      ->check(CLI::IsMember({"hitting", "c-limit"}));
  auto* td_a_opt = density->add_option("--a", td_a, "bridge start (hitting)");
  auto* td_sigma_opt = density->add_option("--sigma", td_sigma, "spatial period (c-limit)");
  density->add_option("--grid", td_grid, "number of interior grid points (default 512)");

  auto* oracle = app.add_subcommand("oracle", "independent cross-checks");
  oracle->require_subcommand(1);
  auto* cmp = oracle->add_subcommand("compare-x", "DEC longest period vs brute force");
  int ox_nmax = 5, ox_sigma = 2, ox_r = 2, ox_rules = 50;
  uint64_t ox_seed = 0;
  cmp->add_option("--n-max", ox_nmax, "check every n up to this")->required();
  cmp->add_option("--sigma", ox_sigma, "spatial period")->required();
  cmp->add_option("--r", ox_r, "neighborhood width")->required();
  cmp->add_option("--rules", ox_rules, "rules per n")->required();
  cmp->add_option("--seed", ox_seed, "master seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) print_error_line("cli", e.what());
    return app.exit(e);
  }

  try {
    if (dec_stats->parsed())
      return run_dec_stats(ds_n, ds_sigma, ds_r, ds_samples, ds_seed, ds_workers, ds_bins, ds_out);
    if (lp->parsed()) return run_longest_period(lp_n, lp_sigma, lp_r, lp_seed);
    if (sc->parsed())
      return run_scaling(sc_sigma, sc_r, sc_nmin, sc_nmax, sc_nstep, sc_samples, sc_seed, sc_out);
    if (a1->parsed()) return run_algo1(a1_n, a1_sigma, a1_samples, a1_seed, a1_out);
    if (density->parsed()) {
      if (td_kind == "hitting" && td_a_opt->count() == 0)
        throw std::invalid_argument("theory density --kind hitting requires --a");
      if (td_kind == "c-limit" && td_sigma_opt->count() == 0)
        throw std::invalid_argument("theory density --kind c-limit requires --sigma");
      return run_theory_density(td_kind, td_a, td_sigma, td_grid);
    }
    if (cmp->parsed()) return run_oracle_compare(ox_nmax, ox_sigma, ox_r, ox_rules, ox_seed);
  } catch (const std::invalid_argument& e) {
    print_error_line("invalid_argument", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    print_error_line("domain_error", e.what());
    return 2;
  } catch (const std::overflow_error& e) {
    print_error_line("overflow", e.what());
    return 3;
  } catch (const std::exception& e) {
    print_error_line("runtime", e.what());
    return 1;
  }
  return 0;
}
