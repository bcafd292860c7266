#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sfmis {

// Discrete power-law tail fit: P(X = x) ~ x^-alpha for x >= xmin.
struct TailFit {
  double alpha_hat = 0.0;
  int xmin = 0;
  double ks_distance = 0.0;
  int tail_size = 0;
};

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maximum-likelihood fit over every candidate xmin (the distinct sample
// values >= 1 whose tail keeps at least 10 observations), picking the
// candidate with the smallest KS distance between the empirical tail and the
// fitted model; ties go to the smaller xmin. Requires at least 10 samples and
// 2 distinct values, otherwise throws InsufficientData.
TailFit fit_discrete_powerlaw(const std::vector<int>& samples);

// Goodness-of-fit p-value by semiparametric bootstrap: each replicate draws
// len(samples) points, resampling the observed body below fit.xmin and
// drawing the rest from the fitted tail, then refits from scratch. Returns
// the fraction of replicates whose KS distance reaches the empirical one.
// The r-th replicate depends only on (seed, r). n_bootstrap must be >= 20.
double gof_pvalue(const std::vector<int>& samples, const TailFit& fit, int n_bootstrap,
                  std::uint64_t seed);

}  // namespace sfmis
