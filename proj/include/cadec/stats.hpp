#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cadec {

// Regularized upper incomplete gamma Q(a, x); series for x < a + 1 and a
// continued fraction otherwise.
double gamma_q(double a, double x);

// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

// Sup distance between the empirical CDF of the samples and a reference
// CDF, evaluated from both sides at every sample point. Rejects empty
// input; the samples need not be sorted.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

struct TwoSampleKs {
  double statistic = 0.0;
  double p_value = 1.0;  // asymptotic, with the small-sample correction
};
TwoSampleKs two_sample_ks(std::vector<double> a, std::vector<double> b);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Goodness of fit of observed bin counts against expected probabilities.
// Bins are pooled left to right until each pooled bin has expected count
// at least min_expected; a deficient trailing pool merges into its
// predecessor.
ChiSquareResult chi_square_gof(const std::vector<int64_t>& observed,
                               const std::vector<double>& expected_probs,
                               double min_expected = 5.0);

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares on (log x, log y). Requires >= 3 points, all
// coordinates positive.
RegressionFit loglog_slope(const std::vector<std::pair<double, double>>& points);

struct Histogram {
  std::vector<double> edges;   // bins + 1 entries, strictly increasing
  std::vector<double> masses;  // probability masses, sum to 1
};

// Uniform-bin histogram over [lo, hi]; every sample must fall inside.
Histogram make_histogram(const std::vector<double>& samples, double lo, double hi, int bins);

struct MeanVariance {
  int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance; 0 when count < 2
};
MeanVariance mean_variance(const std::vector<double>& samples);

// Adaptive Simpson quadrature, absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

// CDF of a density supported on [0, 1], cached on a uniform grid with
// linear (hence monotone) interpolation. Cells touching an endpoint are
// integrated under a square-root substitution so integrable endpoint
// singularities converge.
class GridCdf {
 public:
  GridCdf() = default;
  static GridCdf from_density(const std::function<double(double)>& density, int grid_points = 4096,
                              double cell_tol = 1e-12);
  double operator()(double x) const;
  double total_mass() const { return values_.empty() ? 0.0 : values_.back(); }

 private:
  std::vector<double> values_;
};

}  // namespace cadec
