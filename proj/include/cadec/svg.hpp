#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cadec/stats.hpp"

namespace cadec {

// Self-contained SVG 1.1 documents; no external references.

// Histogram rendered as density bars (mass / bin width), with an optional
// reference density polyline on the same axes.
std::string svg_histogram_plot(const Histogram& hist,
                               const std::vector<std::pair<double, double>>& reference_curve,
                               const std::string& title, const std::string& x_label);

// Log-log scatter with the fitted regression line and a slope annotation.
std::string svg_loglog_plot(const std::vector<std::pair<double, double>>& points,
                            const RegressionFit& fit, const std::string& title,
                            const std::string& x_label, const std::string& y_label);

}  // namespace cadec
