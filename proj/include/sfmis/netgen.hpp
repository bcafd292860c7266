#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sfmis/graph.hpp"

namespace sfmis {

enum class Kernel { product_cap, exponential };

const char* kernel_name(Kernel k);
Kernel parse_kernel(const std::string& name);  // "product-cap" | "exponential"

struct GenConfig {
  int n = 1;
  double beta = 3.5;    // tail exponent, > 2
  double scale = 1.0;   // weight of the lightest vertex
  Kernel kernel = Kernel::product_cap;
  std::uint64_t seed = 0;

  void validate() const;
  std::string to_json() const;
  static GenConfig from_json(const std::string& text);
};

// w[i] = scale * (n / (n - i))^(1 / (beta - 1)), i = 0..n-1; non-decreasing,
// so vertex ids are aligned with weight rank. w[0] = scale, w[n-1] = scale * n^(1/(beta-1)).
using WeightSequence = std::vector<double>;
WeightSequence weight_sequence(int n, double beta, double scale = 1.0);

// Probability of the edge {i, j}; total_weight is the sum over the whole
// sequence (which makes the expected degree of i approximately w_i).
double edge_probability(double wi, double wj, double total_weight, Kernel k);

// Each pair {i, j} present independently with edge_probability. The fast
// sampler runs in O(n + m) expected time by walking pairs in weight-sorted
// order and skipping runs of misses geometrically; the naive sampler is the
// O(n^2) reference implementation kept as a distributional oracle.
Graph sample_graph(const GenConfig& cfg);
Graph sample_graph_naive(const GenConfig& cfg);

// Base-2 iterated logarithm: log*(x) = 0 for x <= 2, else 1 + log*(ceil(log2 x)).
int log_star(std::uint64_t x);

// tau = ceil(log2(n) * log*(n)); the high-degree cutoff used by the two-phase
// protocol and the tail-fit experiment.
int degree_threshold(int n);

// (value, fraction of observations >= value) per distinct value, ascending.
std::vector<std::pair<double, double>> eccdf(const std::vector<double>& values);

// Least-squares slope of log2(fraction) against log2(value), restricted to
// points whose log2(value) lies in the middle `keep` share of the log-range.
double log_log_slope(const std::vector<std::pair<double, double>>& curve, double keep = 0.8);

// Sidecar format: one weight per line, %.17g (round-trips IEEE doubles exactly).
std::string weights_to_text(const WeightSequence& w);
WeightSequence weights_from_text(const std::string& text);
void save_weights(const WeightSequence& w, const std::string& path);
WeightSequence load_weights(const std::string& path);

}  // namespace sfmis
