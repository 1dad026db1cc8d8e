#include "evodyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace evodyn {

Distribution log_binned_distribution(std::span<const double> samples,
                                     double base) {
  if (samples.empty())
    throw std::invalid_argument("log_binned_distribution: no samples");
  if (base <= 1.0) throw std::invalid_argument("log_binned_distribution: base <= 1");
  double max_v = 0.0;
  for (double v : samples) {
    if (v <= 0.0)
      throw std::invalid_argument("log_binned_distribution: nonpositive sample");
    max_v = std::max(max_v, v);
  }
  // edges 1, base, base^2, ... covering max_v
  std::vector<double> edges{1.0};
  while (edges.back() <= max_v) edges.push_back(edges.back() * base);

  Distribution d;
  const std::size_t bins = edges.size() - 1;
  d.bin_lo.resize(bins);
  d.bin_hi.resize(bins);
  d.center.resize(bins);
  d.density.assign(bins, 0.0);
  d.samples = samples.size();
  for (std::size_t b = 0; b < bins; ++b) {
    d.bin_lo[b] = edges[b];
    d.bin_hi[b] = edges[b + 1];
    d.center[b] = std::sqrt(edges[b] * edges[b + 1]);  // geometric center
  }
  for (double v : samples) {
    const std::size_t b = std::min(
        bins - 1, static_cast<std::size_t>(std::floor(std::log(v) / std::log(base))));
    d.density[b] += 1.0;
  }
  for (std::size_t b = 0; b < bins; ++b)
    d.density[b] /= static_cast<double>(d.samples) * (d.bin_hi[b] - d.bin_lo[b]);
  return d;
}

double PowerLawFit::density_at(double x) const {
  return std::exp(log_amplitude - exponent * std::log(x));
}

Distribution log_binned_from_counts(std::span<const long long> counts,
                                    double base) {
  long long total = 0;
  std::size_t max_v = 0;
  for (std::size_t v = 1; v < counts.size(); ++v) {
    if (counts[v] < 0)
      throw std::invalid_argument("log_binned_from_counts: negative count");
    if (counts[v] > 0) {
      total += counts[v];
      max_v = v;
    }
  }
  if (total == 0) throw std::invalid_argument("log_binned_from_counts: empty");
  std::vector<double> edges{1.0};
  while (edges.back() <= static_cast<double>(max_v)) edges.push_back(edges.back() * base);
  Distribution d;
  const std::size_t bins = edges.size() - 1;
  d.bin_lo.resize(bins);
  d.bin_hi.resize(bins);
  d.center.resize(bins);
  d.density.assign(bins, 0.0);
  d.samples = static_cast<std::size_t>(total);
  for (std::size_t b = 0; b < bins; ++b) {
    d.bin_lo[b] = edges[b];
    d.bin_hi[b] = edges[b + 1];
    d.center[b] = std::sqrt(edges[b] * edges[b + 1]);
  }
  for (std::size_t v = 1; v < counts.size(); ++v) {
    if (counts[v] == 0) continue;
    const std::size_t b = std::min(
        bins - 1,
        static_cast<std::size_t>(std::floor(std::log(static_cast<double>(v)) /
                                            std::log(base))));
    d.density[b] += static_cast<double>(counts[v]);
  }
  for (std::size_t b = 0; b < bins; ++b)
    d.density[b] /= static_cast<double>(total) * (d.bin_hi[b] - d.bin_lo[b]);
  return d;
}

PowerLawFit fit_power_law_counts(std::span<const long long> counts,
                                 double x_min, double x_max, double base) {
  std::vector<long long> in_range(counts.size(), 0);
  long long total = 0;
  for (std::size_t v = 1; v < counts.size(); ++v) {
    if (v >= x_min && v <= x_max) {
      in_range[v] = counts[v];
      total += counts[v];
    }
  }
  if (total < 100)
    throw std::invalid_argument("fit_power_law_counts: insufficient data");
  const Distribution d = log_binned_from_counts(in_range, base);
  std::vector<double> lx, ly;
  for (std::size_t b = 0; b < d.density.size(); ++b) {
    if (d.density[b] <= 0.0) continue;
    lx.push_back(std::log(d.center[b]));
    ly.push_back(std::log(d.density[b]));
  }
  if (lx.size() < 3)
    throw std::invalid_argument("fit_power_law_counts: degenerate support");
  PowerLawFit fit;
  double r2 = 0.0, intercept = 0.0;
  const double slope = linear_regression(lx, ly, &intercept, &r2);
  fit.exponent = -slope;
  fit.log_amplitude = intercept;
  fit.r2 = r2;
  fit.x_min = x_min;
  fit.x_max = x_max;
  fit.samples_in_range = static_cast<std::size_t>(total);
  return fit;
}

double density_at(const Distribution& d, double x) {
  for (std::size_t b = 0; b < d.density.size(); ++b)
    if (x >= d.bin_lo[b] && x < d.bin_hi[b]) return d.density[b];
  return 0.0;
}

PowerLawFit fit_power_law(std::span<const double> samples, double x_min,
                          double x_max, double base) {
  if (x_min <= 0.0 || x_max <= x_min)
    throw std::invalid_argument("fit_power_law: bad range");
  std::vector<double> in_range;
  for (double v : samples)
    if (v >= x_min && v <= x_max) in_range.push_back(v);
  if (in_range.size() < 100)
    throw std::invalid_argument("fit_power_law: insufficient data in range");

  const Distribution d = log_binned_distribution(in_range, base);
  std::vector<double> lx, ly;
  for (std::size_t b = 0; b < d.density.size(); ++b) {
    if (d.density[b] <= 0.0) continue;
    lx.push_back(std::log(d.center[b]));
    ly.push_back(std::log(d.density[b]));
  }
  if (lx.size() < 3)
    throw std::invalid_argument("fit_power_law: degenerate support");
  PowerLawFit fit;
  double r2 = 0.0, intercept = 0.0;
  const double slope = linear_regression(lx, ly, &intercept, &r2);
  fit.exponent = -slope;
  fit.log_amplitude = intercept;
  fit.r2 = r2;
  fit.x_min = x_min;
  fit.x_max = x_max;
  fit.samples_in_range = in_range.size();
  return fit;
}

std::vector<int> record_statistics(std::span<const int> values, int window) {
  if (window <= 0) throw std::invalid_argument("record_statistics: bad window");
  std::vector<int> maxima;
  for (std::size_t start = 0; start + window <= values.size(); start += window) {
    int m = values[start];
    for (int j = 1; j < window; ++j)
      m = std::max(m, values[start + j]);
    maxima.push_back(m);
  }
  return maxima;
}

std::vector<std::vector<double>> rank_profile(
    const std::vector<std::vector<std::vector<std::vector<double>>>>& results) {
  if (results.empty()) throw std::invalid_argument("rank_profile: empty");
  const std::size_t functions = results.size();
  const std::size_t designs = results[0].size();
  const std::size_t grid = results[0][0][0].size();
  for (const auto& f : results) {
    if (f.size() != designs) throw std::invalid_argument("rank_profile: ragged designs");
    for (const auto& d : f)
      for (const auto& s : d)
        if (s.size() != grid) throw std::invalid_argument("rank_profile: ragged grid");
  }

  std::vector<std::vector<double>> profile(designs, std::vector<double>(grid, 0.0));
  for (std::size_t f = 0; f < functions; ++f) {
    for (std::size_t t = 0; t < grid; ++t) {
      // gather all runs at this function/time, rank descending F (1 = worst)
      struct Run { double v; std::size_t design; };
      std::vector<Run> runs;
      for (std::size_t d = 0; d < designs; ++d)
        for (const auto& s : results[f][d]) runs.push_back({s[t], d});
      std::vector<std::size_t> order(runs.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return runs[a].v > runs[b].v;  // worst first
      });
      std::vector<double> rank(runs.size());
      for (std::size_t pos = 0; pos < order.size();) {
        std::size_t end = pos;
        while (end + 1 < order.size() && runs[order[end + 1]].v == runs[order[pos]].v)
          ++end;
        const double mid = (static_cast<double>(pos) + end) / 2.0 + 1.0;  // mean rank for ties
        for (std::size_t k = pos; k <= end; ++k) rank[order[k]] = mid;
        pos = end + 1;
      }
      // median over each design's seeds
      std::vector<std::vector<double>> per_design(designs);
      for (std::size_t r = 0; r < runs.size(); ++r)
        per_design[runs[r].design].push_back(rank[r]);
      for (std::size_t d = 0; d < designs; ++d) {
        auto& v = per_design[d];
        std::sort(v.begin(), v.end());
        const double median = v.size() % 2 == 1
                                  ? v[v.size() / 2]
                                  : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
        profile[d][t] += median / static_cast<double>(functions);
      }
    }
  }
  return profile;
}

MannWhitneyResult mann_whitney_u(std::span<const double> a,
                                 std::span<const double> b) {
  const std::size_t n1 = a.size(), n2 = b.size();
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("mann_whitney_u: empty sample");

  // U_a = #(a_i < b_j) + 0.5 #(a_i == b_j): small U_a means a tends larger.
  // Conventional: U_a counts pairs where a precedes b in ascending order.
  double u_a = 0.0;
  for (double va : a)
    for (double vb : b) {
      if (va < vb) u_a += 1.0;
      else if (va == vb) u_a += 0.5;
    }

  MannWhitneyResult res;
  res.u_a = u_a;

  if (n1 < 8 && n2 < 8) {
    // exact: enumerate every way of labelling n1 of the pooled values as "a"
    std::vector<double> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    const std::size_t n = n1 + n2;
    std::vector<std::size_t> comb(n1);
    std::iota(comb.begin(), comb.end(), 0);
    std::size_t total = 0, ge = 0;
    bool more = true;
    while (more) {
      std::vector<char> in_a(n, 0);
      for (std::size_t i : comb) in_a[i] = 1;
      double u = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!in_a[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (in_a[j]) continue;
          if (all[i] < all[j]) u += 1.0;
          else if (all[i] == all[j]) u += 0.5;
        }
      }
      ++total;
      if (u >= u_a - 1e-12) ++ge;  // at least as extreme toward "a smaller"
      // advance to the next combination in lexicographic order
      more = false;
      for (std::size_t k = n1; k-- > 0;) {
        if (comb[k] != k + n - n1) {
          ++comb[k];
          for (std::size_t j = k + 1; j < n1; ++j) comb[j] = comb[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
    res.exact = true;
    res.p_a_less = static_cast<double>(ge) / static_cast<double>(total);
  } else {
    // normal approximation with tie correction
    const double n1d = static_cast<double>(n1), n2d = static_cast<double>(n2);
    const double mean = n1d * n2d / 2.0;
    std::vector<double> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i;
      while (j + 1 < all.size() && all[j + 1] == all[i]) ++j;
      const double t = static_cast<double>(j - i + 1);
      tie_term += t * t * t - t;
      i = j + 1;
    }
    const double n = n1d + n2d;
    const double var =
        n1d * n2d / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (var <= 0.0) {
      res.p_a_less = 0.5;
    } else {
      // continuity corrected; large U_a favors "a smaller"
      const double z = (u_a - mean - 0.5) / std::sqrt(var);
      res.p_a_less = 0.5 * std::erfc(z / std::sqrt(2.0));
    }
    res.exact = false;
  }
  return res;
}

double linear_regression(std::span<const double> x, std::span<const double> y,
                         double* intercept, double* r2) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n)
    throw std::invalid_argument("linear_regression: need matching n >= 2");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_regression: degenerate x");
  const double slope = sxy / sxx;
  if (intercept) *intercept = my - slope * mx;
  if (r2) *r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return slope;
}

}  // namespace evodyn
