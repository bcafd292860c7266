#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sfmis {

// Small self-contained SVG renderers for experiment summaries. Output is
// deterministic: coordinates are formatted with fixed precision.

// Histogram of values with `bins` equal-width bins. If vline is finite, a
// dashed vertical marker is drawn at that x position.
std::string svg_histogram(const std::vector<double>& values, int bins, const std::string& title,
                          double vline);

// One box per named group: box spans the quartiles, a line marks the median,
// whiskers reach the extremes. If hline is finite, a dashed horizontal
// reference is drawn at that y value.
std::string svg_boxplots(const std::vector<std::pair<std::string, std::vector<double>>>& groups,
                         const std::string& title, double hline);

}  // namespace sfmis
