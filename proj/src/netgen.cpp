#include "sfmis/netgen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sfmis/rng.hpp"

namespace sfmis {

const char* kernel_name(Kernel k) {
  return k == Kernel::product_cap ? "product-cap" : "exponential";
}

Kernel parse_kernel(const std::string& name) {
  if (name == "product-cap") return Kernel::product_cap;
  if (name == "exponential") return Kernel::exponential;
  throw std::invalid_argument("unknown kernel: " + name);
}

void GenConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(beta > 2.0)) throw std::invalid_argument("beta must be > 2");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be > 0");
}

std::string GenConfig::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["beta"] = beta;
  j["scale"] = scale;
  j["kernel"] = kernel_name(kernel);
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

GenConfig GenConfig::from_json(const std::string& text) {
  GenConfig cfg;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    cfg.n = j.at("n").get<int>();
    cfg.beta = j.at("beta").get<double>();
    cfg.scale = j.value("scale", 1.0);
    cfg.kernel = parse_kernel(j.value("kernel", std::string("product-cap")));
    cfg.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad generator config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

WeightSequence weight_sequence(int n, double beta, double scale) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(beta > 2.0)) throw std::invalid_argument("beta must be > 2");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be > 0");
  WeightSequence w(n);
  double inv = 1.0 / (beta - 1.0);
  for (int i = 0; i < n; ++i)
    w[i] = scale * std::pow(static_cast<double>(n) / (n - i), inv);
  return w;
}

double edge_probability(double wi, double wj, double total_weight, Kernel k) {
  if (!(wi > 0.0) || !(wj > 0.0) || !(total_weight > 0.0))
    throw std::invalid_argument("weights and total must be positive");
  double x = wi * wj / total_weight;
  if (k == Kernel::product_cap) return std::min(1.0, x);
  return -std::expm1(-x);
}

namespace {

Graph finish(int n, std::vector<std::pair<int, int>>&& edges) {
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph sample_graph(const GenConfig& cfg) {
  cfg.validate();
  WeightSequence w = weight_sequence(cfg.n, cfg.beta, cfg.scale);
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  int n = cfg.n;
  Rng rng = Rng(cfg.seed).derive(0xFA57);

  // Walk ranks in non-increasing weight order (vertex id n-1-rank); for a
  // fixed left rank the pair probability is non-increasing, so misses can be
  // skipped geometrically at the current upper bound p and the survivor kept
  // with probability q/p.
  auto vert = [n](int rank) { return n - 1 - rank; };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    double wi = w[vert(i)];
    int j = i + 1;
    double p = edge_probability(wi, w[vert(j)], total, cfg.kernel);
    while (j < n) {
      if (p < 1.0) {
        double r = rng.next_double();
        double skip = std::floor(std::log1p(-r) / std::log1p(-p));
        if (skip >= static_cast<double>(n - j)) break;
        j += static_cast<int>(skip);
      }
      double q = edge_probability(wi, w[vert(j)], total, cfg.kernel);
      if (rng.next_double() * p < q) edges.emplace_back(vert(i), vert(j));
      p = q;
      ++j;
    }
  }
  return finish(n, std::move(edges));
}

Graph sample_graph_naive(const GenConfig& cfg) {
  cfg.validate();
  WeightSequence w = weight_sequence(cfg.n, cfg.beta, cfg.scale);
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  Rng rng = Rng(cfg.seed).derive(0x0A1E);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < cfg.n; ++i)
    for (int j = i + 1; j < cfg.n; ++j)
      if (rng.next_double() < edge_probability(w[i], w[j], total, cfg.kernel))
        edges.emplace_back(i, j);
  return finish(cfg.n, std::move(edges));
}

int log_star(std::uint64_t x) {
  int r = 0;
  while (x > 2) {
    x = std::bit_width(x - 1);  // ceil(log2 x) for x >= 2
    ++r;
  }
  return r;
}

int degree_threshold(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(n)) * log_star(n)));
}

std::vector<std::pair<double, double>> eccdf(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("eccdf of empty sample");
  std::vector<double> v = values;
  std::sort(v.begin(), v.end());
  std::vector<std::pair<double, double>> curve;
  double n = static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0 && v[i] == v[i - 1]) continue;
    curve.emplace_back(v[i], (n - static_cast<double>(i)) / n);
  }
  return curve;
}

double log_log_slope(const std::vector<std::pair<double, double>>& curve, double keep) {
  if (!(keep > 0.0) || keep > 1.0) throw std::invalid_argument("keep must be in (0, 1]");
  double lo = std::log2(curve.front().first), hi = std::log2(curve.back().first);
  if (!(hi > lo)) throw std::invalid_argument("degenerate value range");
  double margin = (1.0 - keep) / 2.0 * (hi - lo);
  double a = lo + margin, b = hi - margin;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (auto [value, frac] : curve) {
    double x = std::log2(value);
    if (x < a || x > b) continue;
    double y = std::log2(frac);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++k;
  }
  if (k < 2) throw std::invalid_argument("too few points in the kept band");
  double denom = k * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("degenerate regression");
  return (k * sxy - sx * sy) / denom;
}

std::string weights_to_text(const WeightSequence& w) {
  std::string out;
  char buf[64];
  for (double x : w) {
    std::snprintf(buf, sizeof buf, "%.17g\n", x);
    out += buf;
  }
  return out;
}

WeightSequence weights_from_text(const std::string& text) {
  std::istringstream is(text);
  WeightSequence w;
  double x;
  while (is >> x) w.push_back(x);
  if (!is.eof()) throw std::invalid_argument("weights: malformed line");
  return w;
}

void save_weights(const WeightSequence& w, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << weights_to_text(w);
  if (!f) throw std::runtime_error("write failed: " + path);
}

WeightSequence load_weights(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return weights_from_text(buf.str());
}

}  // namespace sfmis
