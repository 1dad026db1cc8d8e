#include "evodyn/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace evodyn {

std::vector<std::size_t> stochastic_rank(std::span<const double> f,
                                         std::span<const double> phi,
                                         double pf, int sweeps, Rng& rng) {
  if (pf < 0.0 || pf > 1.0) throw std::invalid_argument("stochastic_rank: bad pf");
  const std::size_t n = f.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const std::size_t a = order[k], b = order[k + 1];
      const bool both_feasible = phi[a] == 0.0 && phi[b] == 0.0;
      if (both_feasible || rng.uniform() < pf) {
        if (f[a] > f[b]) {
          std::swap(order[k], order[k + 1]);
          swapped = true;
        }
      } else if (phi[a] > phi[b]) {
        std::swap(order[k], order[k + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return order;
}

std::size_t tournament_select(std::span<const double> scores, int q, Rng& rng,
                              bool with_replacement) {
  const std::size_t n = scores.size();
  if (q < 1) throw std::invalid_argument("tournament_select: q < 1");
  if (!with_replacement && static_cast<std::size_t>(q) > n)
    throw std::invalid_argument("tournament_select: q > population");
  std::size_t best = n;
  if (with_replacement) {
    for (int t = 0; t < q; ++t) {
      const std::size_t i = rng.uniform_index(n);
      if (best == n || scores[i] < scores[best]) best = i;
    }
  } else {
    // partial Fisher-Yates over an index pool
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int t = 0; t < q; ++t) {
      const std::size_t j = t + rng.uniform_index(n - t);
      std::swap(pool[t], pool[j]);
      const std::size_t i = pool[t];
      if (best == n || scores[i] < scores[best]) best = i;
    }
  }
  return best;
}

std::vector<std::size_t> truncation_select(std::span<const double> scores,
                                           double T) {
  if (T <= 0.0 || T > 1.0) throw std::invalid_argument("truncation_select: bad T");
  const std::size_t n = scores.size();
  const std::size_t keep = static_cast<std::size_t>(std::floor(T * n));
  if (keep == 0) throw std::invalid_argument("truncation_select: floor(T*N) = 0");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  order.resize(keep);
  return order;
}

namespace {

std::size_t categorical_by_weight(std::span<const double> w, Rng& rng) {
  double total = 0.0;
  for (double v : w) total += v;
  if (total <= 0.0) throw std::invalid_argument("selection: nonpositive weights");
  double u = rng.uniform() * total;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    u -= w[i];
    if (u < 0.0) return i;
  }
  return w.size() - 1;
}

// ranks[i] = 1-based rank of i, 1 = best (lowest score), stable ties
std::vector<int> ranks_of(std::span<const double> scores) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::vector<int> rank(n);
  for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = static_cast<int>(pos) + 1;
  return rank;
}

}  // namespace

std::size_t linear_rank_select(std::span<const double> scores, double eta_plus,
                               double eta_minus, Rng& rng) {
  const auto rank = ranks_of(scores);
  const double n = static_cast<double>(scores.size());
  std::vector<double> w(scores.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = eta_minus + (eta_plus - eta_minus) * (n - rank[i]);
  return categorical_by_weight(w, rng);
}

std::size_t exponential_rank_select(std::span<const double> scores, double c,
                                    Rng& rng) {
  if (c <= 0.0 || c >= 1.0)
    throw std::invalid_argument("exponential_rank_select: need 0 < c < 1");
  const auto rank = ranks_of(scores);
  std::vector<double> w(scores.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::pow(c, rank[i]);
  return categorical_by_weight(w, rng);
}

std::size_t proportional_select(std::span<const double> fitness, Rng& rng) {
  for (double v : fitness)
    if (v <= 0.0)
      throw std::invalid_argument("proportional_select: nonpositive fitness");
  return categorical_by_weight(fitness, rng);
}

std::vector<std::size_t> modified_tournament_step(std::span<const double> scores,
                                                  int removals, Rng& rng) {
  const std::size_t n = scores.size();
  if (n < 2) throw std::invalid_argument("modified_tournament_step: pool < 2");
  std::vector<std::size_t> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  for (int r = 0; r < removals && alive.size() > 1; ++r) {
    const std::size_t ia = rng.uniform_index(alive.size());
    std::size_t ib = rng.uniform_index(alive.size() - 1);
    if (ib >= ia) ++ib;
    const std::size_t a = alive[ia], b = alive[ib];
    std::size_t dead;
    if (scores[a] > scores[b]) dead = ia;
    else if (scores[b] > scores[a]) dead = ib;
    else dead = rng.bernoulli(0.5) ? ia : ib;  // exact tie: coin
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(dead));
  }
  return alive;
}

void deterministic_crowding_generation(std::size_t population_size,
                                       std::span<const double> parent_scores,
                                       const std::function<void(std::size_t, std::size_t)>& breed_pair,
                                       const CrowdingCallbacks& cb, Rng& rng) {
  if (population_size % 2 != 0)
    throw std::invalid_argument("deterministic_crowding: odd population size");
  std::vector<std::size_t> order(population_size);
  std::iota(order.begin(), order.end(), 0);
  // random disjoint pairs
  for (std::size_t i = 0; i + 1 < population_size; ++i) {
    const std::size_t j = i + rng.uniform_index(population_size - i);
    std::swap(order[i], order[j]);
  }
  for (std::size_t p = 0; p + 1 < population_size; p += 2) {
    const std::size_t p1 = order[p], p2 = order[p + 1];
    breed_pair(p1, p2);
    const double d_same = cb.distance(p1, 0) + cb.distance(p2, 1);
    const double d_cross = cb.distance(p1, 1) + cb.distance(p2, 0);
    const int c_for_p1 = d_same < d_cross ? 0 : 1;
    const int c_for_p2 = 1 - c_for_p1;
    if (cb.child_score(c_for_p1) < parent_scores[p1]) cb.replace(p1, c_for_p1);
    if (cb.child_score(c_for_p2) < parent_scores[p2]) cb.replace(p2, c_for_p2);
  }
}

}  // namespace evodyn
