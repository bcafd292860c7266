#include "sfmis/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sfmis {

namespace {

constexpr double kWidth = 640.0, kHeight = 400.0;
constexpr double kLeft = 56.0, kRight = 16.0, kTop = 36.0, kBottom = 40.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

void header(std::ostringstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\""
      << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth) << " " << fmt(kHeight) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
}

void axes(std::ostringstream& out) {
  out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kHeight - kBottom) << "\" x2=\""
      << fmt(kWidth - kRight) << "\" y2=\"" << fmt(kHeight - kBottom)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
      << "\" y2=\"" << fmt(kHeight - kBottom) << "\" stroke=\"black\"/>\n";
}

void tick_label(std::ostringstream& out, double x, double y, const std::string& text,
                const char* anchor) {
  out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" text-anchor=\"" << anchor
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << text << "</text>\n";
}

double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  double pos = p * (sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  double frac = pos - lo;
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace

std::string svg_histogram(const std::vector<double>& values, int bins, const std::string& title,
                          double vline) {
  std::ostringstream out;
  header(out, title);
  if (values.empty() || bins < 1) {
    out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"" << fmt(kHeight / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">no data"
        << "</text>\n</svg>\n";
    return out.str();
  }

  double lo = *std::min_element(values.begin(), values.end());
  double hi = *std::max_element(values.begin(), values.end());
  if (std::isfinite(vline)) {
    lo = std::min(lo, vline);
    hi = std::max(hi, vline);
  }
  if (hi <= lo) hi = lo + 1.0;
  double span = hi - lo;
  lo -= 0.05 * span;
  hi += 0.05 * span;
  span = hi - lo;

  std::vector<int> count(bins, 0);
  for (double v : values) {
    int b = static_cast<int>((v - lo) / span * bins);
    b = std::clamp(b, 0, bins - 1);
    ++count[b];
  }
  int peak = *std::max_element(count.begin(), count.end());
  if (peak < 1) peak = 1;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto xpos = [&](double v) { return kLeft + (v - lo) / span * plot_w; };

  axes(out);
  for (int b = 0; b < bins; ++b) {
    if (count[b] == 0) continue;
    double x0 = kLeft + plot_w * b / bins;
    double w = plot_w / bins;
    double h = plot_h * count[b] / peak;
    out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(kHeight - kBottom - h) << "\" width=\""
        << fmt(w) << "\" height=\"" << fmt(h)
        << "\" fill=\"steelblue\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
  }
  if (std::isfinite(vline)) {
    double x = xpos(vline);
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(kHeight - kBottom)
        << "\" stroke=\"crimson\" stroke-dasharray=\"5,4\"/>\n";
    tick_label(out, x, kTop - 4, fmt(vline), "middle");
  }
  tick_label(out, kLeft, kHeight - kBottom + 16, fmt(lo), "start");
  tick_label(out, kWidth - kRight, kHeight - kBottom + 16, fmt(hi), "end");
  tick_label(out, kLeft - 6, kTop + 8, std::to_string(peak), "end");
  out << "</svg>\n";
  return out.str();
}

std::string svg_boxplots(const std::vector<std::pair<std::string, std::vector<double>>>& groups,
                         const std::string& title, double hline) {
  std::ostringstream out;
  header(out, title);

  double lo = std::isfinite(hline) ? hline : 0.0;
  double hi = lo;
  bool any = false;
  for (const auto& [name, vals] : groups) {
    for (double v : vals) {
      if (!any) {
        lo = hi = v;
        any = true;
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!any) {
    out << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"" << fmt(kHeight / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">no data"
        << "</text>\n</svg>\n";
    return out.str();
  }
  if (std::isfinite(hline)) {
    lo = std::min(lo, hline);
    hi = std::max(hi, hline);
  }
  if (hi <= lo) hi = lo + 1.0;
  double span = hi - lo;
  lo -= 0.08 * span;
  hi += 0.08 * span;
  span = hi - lo;

  const double plot_w = kWidth - kLeft - kRight;
  auto ypos = [&](double v) { return kHeight - kBottom - (v - lo) / span * (kHeight - kTop - kBottom); };

  axes(out);
  const int g = static_cast<int>(groups.size());
  for (int i = 0; i < g; ++i) {
    std::vector<double> vals = groups[i].second;
    if (vals.empty()) continue;
    std::sort(vals.begin(), vals.end());
    double q1 = quantile(vals, 0.25), q2 = quantile(vals, 0.5), q3 = quantile(vals, 0.75);
    double cx = kLeft + plot_w * (i + 0.5) / g;
    double bw = std::min(48.0, plot_w / g * 0.6);

    out << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(ypos(vals.front())) << "\" x2=\""
        << fmt(cx) << "\" y2=\"" << fmt(ypos(vals.back())) << "\" stroke=\"black\"/>\n";
    out << "<rect x=\"" << fmt(cx - bw / 2) << "\" y=\"" << fmt(ypos(q3)) << "\" width=\""
        << fmt(bw) << "\" height=\"" << fmt(ypos(q1) - ypos(q3))
        << "\" fill=\"lightsteelblue\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt(cx - bw / 2) << "\" y1=\"" << fmt(ypos(q2)) << "\" x2=\""
        << fmt(cx + bw / 2) << "\" y2=\"" << fmt(ypos(q2))
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    tick_label(out, cx, kHeight - kBottom + 16, groups[i].first, "middle");
  }
  if (std::isfinite(hline)) {
    out << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(ypos(hline)) << "\" x2=\""
        << fmt(kWidth - kRight) << "\" y2=\"" << fmt(ypos(hline))
        << "\" stroke=\"crimson\" stroke-dasharray=\"5,4\"/>\n";
    tick_label(out, kWidth - kRight, ypos(hline) - 4, fmt(hline), "end");
  }
  tick_label(out, kLeft - 6, ypos(lo) + 4, fmt(lo), "end");
  tick_label(out, kLeft - 6, ypos(hi) + 4, fmt(hi), "end");
  out << "</svg>\n";
  return out.str();
}

}  // namespace sfmis
