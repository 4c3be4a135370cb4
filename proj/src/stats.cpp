#include "cadec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cadec {

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("gamma_q: need a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) {
    // lower series
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    const double log_p = -x + a * std::log(x) - std::lgamma(a) + std::log(sum);
    return 1.0 - std::exp(log_p);
  }
  // continued fraction for Q directly (modified Lentz)
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  const double log_q = -x + a * std::log(x) - std::lgamma(a) + std::log(h);
  return log_q < -745.0 ? 0.0 : std::exp(log_q);
}

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 101; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample set");
  std::sort(samples.begin(), samples.end());
  const double m = static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::fabs(f - static_cast<double>(i) / m));
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / m - f));
  }
  return d;
}

TwoSampleKs two_sample_ks(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("two_sample_ks: empty sample set");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_q((ne + 0.12 + 0.11 / ne) * d)};
}

ChiSquareResult chi_square_gof(const std::vector<int64_t>& observed,
                               const std::vector<double>& expected_probs, double min_expected) {
  if (observed.size() != expected_probs.size() || observed.empty())
    throw std::invalid_argument("chi_square_gof: mismatched or empty inputs");
  int64_t total = 0;
  for (int64_t c : observed) total += c;
  if (total <= 0) throw std::invalid_argument("chi_square_gof: no observations");

  std::vector<std::pair<double, double>> pooled;  // (observed, expected)
  double obs_acc = 0.0, exp_acc = 0.0;
  for (size_t i = 0; i < observed.size(); ++i) {
    obs_acc += static_cast<double>(observed[i]);
    exp_acc += expected_probs[i] * static_cast<double>(total);
    if (exp_acc >= min_expected) {
      pooled.emplace_back(obs_acc, exp_acc);
      obs_acc = exp_acc = 0.0;
    }
  }
  if (exp_acc > 0.0 || obs_acc > 0.0) {
    if (pooled.empty())
      pooled.emplace_back(obs_acc, exp_acc);
    else {
      pooled.back().first += obs_acc;
      pooled.back().second += exp_acc;
    }
  }
  if (pooled.size() < 2)
    throw std::invalid_argument("chi_square_gof: fewer than two pooled bins");

  double stat = 0.0;
  for (const auto& [obs, exp] : pooled) stat += (obs - exp) * (obs - exp) / exp;
  const int dof = static_cast<int>(pooled.size()) - 1;
  return {stat, dof, gamma_q(dof / 2.0, stat / 2.0)};
}

RegressionFit loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("loglog_slope: need at least 3 points");
  std::vector<double> xs, ys;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("loglog_slope: coordinates must be positive");
    xs.push_back(std::log(x));
    ys.push_back(std::log(y));
  }
  const double m = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("loglog_slope: degenerate abscissae");
  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

Histogram make_histogram(const std::vector<double>& samples, double lo, double hi, int bins) {
  if (bins < 1) throw std::invalid_argument("make_histogram: need at least one bin");
  if (!(hi > lo)) throw std::invalid_argument("make_histogram: empty range");
  if (samples.empty()) throw std::invalid_argument("make_histogram: empty sample set");
  Histogram h;
  h.edges.resize(static_cast<size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i)
    h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  std::vector<int64_t> counts(static_cast<size_t>(bins), 0);
  for (double x : samples) {
    if (x < lo || x > hi) throw std::invalid_argument("make_histogram: sample outside range");
    int idx = static_cast<int>((x - lo) / (hi - lo) * bins);
    idx = std::clamp(idx, 0, bins - 1);  // x == hi lands in the last bin
    ++counts[idx];
  }
  h.masses.resize(static_cast<size_t>(bins));
  for (int i = 0; i < bins; ++i)
    h.masses[i] = static_cast<double>(counts[i]) / static_cast<double>(samples.size());
  return h;
}

MeanVariance mean_variance(const std::vector<double>& samples) {
  MeanVariance mv;
  mv.count = static_cast<int64_t>(samples.size());
  if (mv.count == 0) return mv;
  double sum = 0.0;
  for (double x : samples) sum += x;
  mv.mean = sum / static_cast<double>(mv.count);
  if (mv.count >= 2) {
    double ss = 0.0;
    for (double x : samples) ss += (x - mv.mean) * (x - mv.mean);
    mv.variance = ss / static_cast<double>(mv.count - 1);
  }
  return mv;
}

namespace {

double simpson_recurse(const std::function<double(double)>& f, double a, double b, double fa,
                       double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_recurse(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 60);
}

GridCdf GridCdf::from_density(const std::function<double(double)>& density, int grid_points,
                              double cell_tol) {
  if (grid_points < 2) throw std::invalid_argument("GridCdf: need at least two grid points");
  GridCdf cdf;
  cdf.values_.resize(static_cast<size_t>(grid_points));
  cdf.values_[0] = 0.0;
  const double h = 1.0 / static_cast<double>(grid_points - 1);
  for (int i = 1; i < grid_points; ++i) {
    const double x0 = static_cast<double>(i - 1) * h;
    const double x1 = static_cast<double>(i) * h;
    double cell;
    if (i == 1) {
      // x = x1 u^2 tames an integrable singularity at 0; points that round
      // onto the domain boundary contribute nothing and are refined away
      cell = adaptive_simpson(
          [&](double u) {
            const double x = x1 * u * u;
            return x <= 0.0 || x >= 1.0 ? 0.0 : density(x) * 2.0 * x1 * u;
          },
          0.0, 1.0, cell_tol);
    } else if (i == grid_points - 1) {
      // mirrored substitution at 1
      const double w = 1.0 - x0;
      cell = adaptive_simpson(
          [&](double u) {
            const double x = 1.0 - w * u * u;
            return x <= 0.0 || x >= 1.0 ? 0.0 : density(x) * 2.0 * w * u;
          },
          0.0, 1.0, cell_tol);
    } else {
      cell = adaptive_simpson(density, x0, x1, cell_tol);
    }
    cdf.values_[i] = cdf.values_[i - 1] + std::max(cell, 0.0);
  }
  return cdf;
}

double GridCdf::operator()(double x) const {
  if (values_.empty()) throw std::logic_error("GridCdf: uninitialized");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return values_.back();
  const double pos = x * static_cast<double>(values_.size() - 1);
  const size_t idx = std::min(static_cast<size_t>(pos), values_.size() - 2);
  const double frac = pos - static_cast<double>(idx);
  return values_[idx] + frac * (values_[idx + 1] - values_[idx]);
}

}  // namespace cadec
