#include "sfmis/plfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfmis/rng.hpp"

namespace sfmis {

namespace {

constexpr int kMinTail = 10;

// s must be sorted ascending.
TailFit fit_sorted(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  if (n < kMinTail) throw InsufficientData("need at least 10 samples");
  if (s.front() == s.back()) throw InsufficientData("need at least 2 distinct values");

  std::vector<double> suffix_log(n + 1, 0.0);
  for (int i = n - 1; i >= 0; --i)
    suffix_log[i] = suffix_log[i + 1] + (s[i] >= 1 ? std::log(static_cast<double>(s[i])) : 0.0);

  TailFit best;
  bool found = false;

  int i = static_cast<int>(std::lower_bound(s.begin(), s.end(), 1) - s.begin());
  while (i < n) {
    const int v = s[i];
    const int k = n - i;
    const int next = static_cast<int>(std::upper_bound(s.begin() + i, s.end(), v) - s.begin());
    // A tail that is one repeated value always fits with zero KS distance, so
    // a threshold only qualifies when at least two distinct values sit above it.
    if (k >= kMinTail && v != s[n - 1]) {
      const double shift = v - 0.5;
      const double denom = suffix_log[i] - k * std::log(shift);
      const double alpha = 1.0 + k / denom;

      // KS distance between the empirical tail and the fitted model, both as
      // upper-tail probabilities evaluated at every distinct tail value.
      double ks = 0.0;
      int j = i;
      while (j < n) {
        const int u = s[j];
        const double emp = static_cast<double>(n - j) / k;
        const double model = std::pow((u - 0.5) / shift, 1.0 - alpha);
        ks = std::max(ks, std::fabs(emp - model));
        j = static_cast<int>(std::upper_bound(s.begin() + j, s.end(), u) - s.begin());
      }

      if (!found || ks < best.ks_distance) {
        best = TailFit{alpha, v, ks, k};
        found = true;
      }
    }
    i = next;
  }

  if (!found) throw InsufficientData("no threshold keeps a tail of 10 observations");
  return best;
}

}  // namespace

TailFit fit_discrete_powerlaw(const std::vector<int>& samples) {
  for (int x : samples)
    if (x < 0) throw std::invalid_argument("samples must be non-negative");
  std::vector<int> s(samples);
  std::sort(s.begin(), s.end());
  return fit_sorted(s);
}

double gof_pvalue(const std::vector<int>& samples, const TailFit& fit, int n_bootstrap,
                  std::uint64_t seed) {
  if (n_bootstrap < 20) throw std::invalid_argument("n_bootstrap must be at least 20");
  if (!(fit.alpha_hat > 1.0) || fit.xmin < 1)
    throw std::invalid_argument("fit must have alpha_hat > 1 and xmin >= 1");
  const int n = static_cast<int>(samples.size());
  if (n < kMinTail) throw InsufficientData("need at least 10 samples");

  std::vector<int> body;
  for (int x : samples)
    if (x < fit.xmin) body.push_back(x);
  const int n_body = static_cast<int>(body.size());

  const double shift = fit.xmin - 0.5;
  const double inv_exp = -1.0 / (fit.alpha_hat - 1.0);
  const double int_max = static_cast<double>(std::numeric_limits<int>::max());

  int exceed = 0;
  std::vector<int> rep(n);
  for (int r = 0; r < n_bootstrap; ++r) {
    Rng rng = Rng(seed).derive(static_cast<std::uint64_t>(r));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n))) < n_body) {
        rep[i] = body[rng.next_below(static_cast<std::uint64_t>(n_body))];
      } else {
        const double u = rng.next_double();
        const double x = std::floor(shift * std::pow(1.0 - u, inv_exp) + 0.5);
        rep[i] = x >= int_max ? std::numeric_limits<int>::max() : static_cast<int>(x);
      }
    }
    std::sort(rep.begin(), rep.end());
    double ks_r;
    try {
      ks_r = fit_sorted(rep).ks_distance;
    } catch (const InsufficientData&) {
      ks_r = std::numeric_limits<double>::infinity();  // degenerate draw: count as exceeding
    }
    if (ks_r >= fit.ks_distance) ++exceed;
  }
  return static_cast<double>(exceed) / n_bootstrap;
}

}  // namespace sfmis
