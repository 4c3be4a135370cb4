#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cadec/stats.hpp"

namespace cadec {

enum class ExperimentKind {
  cemetery_histogram,      // rule -> DEC -> C/N, histogram vs the limit density
  longest_period_scaling,  // mean longest period over a sweep of n, log-log fit
  algo1_vs_dec,            // counter construction vs full DEC, two-sample KS
  expanding_law,           // expanding numbers of DEC cycles vs phi(d)/sigma
  mapping_stats,           // cyclic-point count of random mappings vs its pmf
  eta_vs_density,          // Euler-Maruyama hitting draws vs the limit density
};

std::string to_string(ExperimentKind kind);

// Declarative Monte Carlo experiment. The seed fully determines every
// sample: the stream for sample i is RngStream(seed, i) (scaling sweeps
// flatten (point, sample) pairs into one index; the DEC half of
// algo1_vs_dec uses indices offset by the sample count). Results are
// byte-identical for equal specs regardless of worker count.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::cemetery_histogram;
  std::vector<int> n_values;  // alphabet sizes, or the mapping size N
  int sigma = 2;
  int r = 2;
  int64_t samples = 1000;  // per point; per side for algo1_vs_dec; rules for expanding_law
  uint64_t seed = 0;
  int workers = 0;  // 0 = hardware concurrency
  std::filesystem::path output_dir;  // empty = no files
  int bins = 50;
  double dt = 1e-4;  // eta_vs_density only
};

struct PointStats {
  std::string label;
  double n_value = 0.0;
  int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
};

struct SummaryStats {
  std::string kind;
  std::vector<int> n_values;
  int sigma = 0;
  int r = 0;
  int64_t samples = 0;
  uint64_t seed = 0;
  int workers = 1;
  int bins = 0;
  double dt = 0.0;
  std::vector<PointStats> points;
  std::optional<Histogram> histogram;
  std::optional<double> ks_statistic;
  std::optional<double> ks_p_value;
  std::optional<ChiSquareResult> chi_square;
  std::optional<RegressionFit> fit;
  std::vector<std::string> notes;
};

struct RawSample {
  int64_t index = 0;
  double value = 0.0;
  int n = -1;  // per-sample n for sweeps; -1 = column absent
};

struct ExperimentResult {
  SummaryStats summary;
  std::vector<RawSample> raw;
  std::vector<std::pair<double, double>> reference_curve;  // density overlay, may be empty
};

// Runs the experiment and, when spec.output_dir is set, writes
// raw_samples.csv, summary.json and plot.svg into it.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// File emission alone; the directory is created on demand.
void emit_outputs(const ExperimentResult& result, const std::filesystem::path& dir);

std::string summary_to_json(const SummaryStats& summary);

}  // namespace cadec
