#pragma once

#include <span>
#include <vector>

namespace evodyn {

/// Log-binned empirical density: edges at powers of `base` starting from 1,
/// densities normalized by bin width and total count so the bin-width
/// weighted sum is 1.
struct Distribution {
  std::vector<double> bin_lo, bin_hi, center, density;
  std::size_t samples = 0;
};

Distribution log_binned_distribution(std::span<const double> samples,
                                     double base = 2.0);

struct PowerLawFit {
  double exponent = 0.0;  // positive convention: density ~ x^-exponent
  double log_amplitude = 0.0;  // density(x) ~ exp(log_amplitude) * x^-exponent
  double r2 = 0.0;
  double x_min = 0.0, x_max = 0.0;
  std::size_t samples_in_range = 0;

  double density_at(double x) const;
};

/// Least squares of log density against log bin center over [x_min, x_max].
/// Requires >= 100 samples in range and >= 3 populated bins.
PowerLawFit fit_power_law(std::span<const double> samples, double x_min,
                          double x_max, double base = 2.0);

/// Histogram forms for integer-valued samples: counts[v] = occurrences of
/// value v (index 0 unused). Equivalent to expanding the samples.
Distribution log_binned_from_counts(std::span<const long long> counts,
                                    double base = 2.0);
PowerLawFit fit_power_law_counts(std::span<const long long> counts,
                                 double x_min, double x_max, double base = 2.0);

/// Density (from a log-binned distribution) interpolated at x; 0 outside.
double density_at(const Distribution& d, double x);

/// Largest value in each consecutive `window` entries, in stream order;
/// incomplete trailing windows are dropped.
std::vector<int> record_statistics(std::span<const int> values, int window);

/// Per-design rank profile: results[f][d][s] is design d's trajectory for
/// seed s on function f, sampled on a common generation grid (minimization).
/// At every (function, grid point) all runs are ranked together (1 = worst,
/// higher = better, ties averaged); the median over seeds is taken per
/// design, then the mean over functions. Output: [design][grid point].
std::vector<std::vector<double>> rank_profile(
    const std::vector<std::vector<std::vector<std::vector<double>>>>& results);

struct MannWhitneyResult {
  double u_a = 0.0;         // U statistic of sample a
  double p_a_less = 0.0;    // one-sided p for "a tends smaller than b"
  bool exact = false;
};

/// Rank-sum test. Exact enumeration when both samples are below 8, normal
/// approximation with tie correction otherwise.
MannWhitneyResult mann_whitney_u(std::span<const double> a,
                                 std::span<const double> b);

double linear_regression(std::span<const double> x, std::span<const double> y,
                         double* intercept = nullptr, double* r2 = nullptr);

}  // namespace evodyn
