#include "cadec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace cadec {

namespace {

constexpr double kWidth = 820.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 790.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 500.0;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"820\" "
         "height=\"560\" viewBox=\"0 0 820 560\">\n"
         "<rect x=\"0\" y=\"0\" width=\"820\" height=\"560\" fill=\"white\"/>\n";
}

std::string axes() {
  std::string s;
  s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
       "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
       num(kBottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  return s;
}

std::string tick_labels(double lo, double hi, bool horizontal,
                        const std::function<double(double)>& to_px) {
  std::string s;
  for (int i = 0; i <= 5; ++i) {
    const double v = lo + (hi - lo) * i / 5.0;
    const double px = to_px(v);
    if (horizontal) {
      s += "<line x1=\"" + num(px) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(px) + "\" y2=\"" +
           num(kBottom + 5) + "\" stroke=\"black\"/>\n";
      s += "<text x=\"" + num(px) + "\" y=\"" + num(kBottom + 20) +
           "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">" + num(v) +
           "</text>\n";
    } else {
      s += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(px) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(px) + "\" stroke=\"black\"/>\n";
      s += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(px + 4) +
           "\" font-size=\"12\" text-anchor=\"end\" font-family=\"sans-serif\">" + num(v) +
           "</text>\n";
    }
  }
  return s;
}

std::string title_text(const std::string& title, const std::string& x_label) {
  std::string s;
  s += "<text x=\"410\" y=\"28\" font-size=\"16\" text-anchor=\"middle\" "
       "font-family=\"sans-serif\">" +
       title + "</text>\n";
  s += "<text x=\"430\" y=\"540\" font-size=\"13\" text-anchor=\"middle\" "
       "font-family=\"sans-serif\">" +
       x_label + "</text>\n";
  return s;
}

}  // namespace

std::string svg_histogram_plot(const Histogram& hist,
                               const std::vector<std::pair<double, double>>& reference_curve,
                               const std::string& title, const std::string& x_label) {
  if (hist.edges.size() < 2) throw std::invalid_argument("svg_histogram_plot: empty histogram");
  const double x_lo = hist.edges.front();
  const double x_hi = hist.edges.back();
  double y_max = 0.0;
  std::vector<double> densities(hist.masses.size());
  for (size_t i = 0; i < hist.masses.size(); ++i) {
    densities[i] = hist.masses[i] / (hist.edges[i + 1] - hist.edges[i]);
    y_max = std::max(y_max, densities[i]);
  }
  for (const auto& [x, y] : reference_curve) {
    (void)x;
    y_max = std::max(y_max, y);
  }
  if (y_max <= 0.0) y_max = 1.0;
  y_max *= 1.05;

  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * (kRight - kLeft); };
  auto py = [&](double y) { return kBottom - y / y_max * (kBottom - kTop); };

  std::string s = header() + title_text(title, x_label);
  for (size_t i = 0; i < densities.size(); ++i) {
    const double x0 = px(hist.edges[i]);
    const double x1 = px(hist.edges[i + 1]);
    const double y = py(densities[i]);
    s += "<rect x=\"" + num(x0) + "\" y=\"" + num(y) + "\" width=\"" + num(x1 - x0) +
         "\" height=\"" + num(kBottom - y) +
         "\" fill=\"#7aa6d6\" stroke=\"#587da6\" stroke-width=\"0.5\"/>\n";
  }
  if (!reference_curve.empty()) {
    std::string pts;
    for (const auto& [x, y] : reference_curve)
      pts += num(px(x)) + "," + num(py(std::min(y, y_max))) + " ";
    s += "<polyline points=\"" + pts +
         "\" fill=\"none\" stroke=\"#c23b22\" stroke-width=\"2\"/>\n";
  }
  s += axes();
  s += tick_labels(x_lo, x_hi, true, px);
  s += tick_labels(0.0, y_max, false, py);
  s += "</svg>\n";
  return s;
}

std::string svg_loglog_plot(const std::vector<std::pair<double, double>>& points,
                            const RegressionFit& fit, const std::string& title,
                            const std::string& x_label, const std::string& y_label) {
  if (points.empty()) throw std::invalid_argument("svg_loglog_plot: no points");
  double lx_lo = 1e300, lx_hi = -1e300, ly_lo = 1e300, ly_hi = -1e300;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("svg_loglog_plot: coordinates must be positive");
    lx_lo = std::min(lx_lo, std::log10(x));
    lx_hi = std::max(lx_hi, std::log10(x));
    ly_lo = std::min(ly_lo, std::log10(y));
    ly_hi = std::max(ly_hi, std::log10(y));
  }
  const double x_pad = std::max(0.05, (lx_hi - lx_lo) * 0.08);
  const double y_pad = std::max(0.05, (ly_hi - ly_lo) * 0.08);
  lx_lo -= x_pad;
  lx_hi += x_pad;
  ly_lo -= y_pad;
  ly_hi += y_pad;

  auto px = [&](double lx) { return kLeft + (lx - lx_lo) / (lx_hi - lx_lo) * (kRight - kLeft); };
  auto py = [&](double ly) { return kBottom - (ly - ly_lo) / (ly_hi - ly_lo) * (kBottom - kTop); };

  std::string s = header() + title_text(title, x_label);
  s += "<text x=\"20\" y=\"275\" font-size=\"13\" text-anchor=\"middle\" "
       "font-family=\"sans-serif\" transform=\"rotate(-90 20 275)\">" +
       y_label + "</text>\n";

  // regression line in natural-log space mapped onto the log10 axes
  const double ln10 = std::log(10.0);
  auto fit_ly = [&](double lx) { return (fit.intercept + fit.slope * (lx * ln10)) / ln10; };
  s += "<line x1=\"" + num(px(lx_lo)) + "\" y1=\"" + num(py(fit_ly(lx_lo))) + "\" x2=\"" +
       num(px(lx_hi)) + "\" y2=\"" + num(py(fit_ly(lx_hi))) +
       "\" stroke=\"#c23b22\" stroke-width=\"1.5\"/>\n";

  for (const auto& [x, y] : points)
    s += "<circle cx=\"" + num(px(std::log10(x))) + "\" cy=\"" + num(py(std::log10(y))) +
         "\" r=\"4\" fill=\"#2e5e8c\"/>\n";

  char note[128];
  std::snprintf(note, sizeof note, "slope = %.4f, R&#178; = %.4f", fit.slope, fit.r_squared);
  s += std::string("<text x=\"100\" y=\"70\" font-size=\"14\" font-family=\"sans-serif\">") +
       note + "</text>\n";

  s += axes();
  s += tick_labels(lx_lo, lx_hi, true, px);
  s += tick_labels(ly_lo, ly_hi, false, py);
  s += "</svg>\n";
  return s;
}

}  // namespace cadec
