#include "evodyn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace evodyn {

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph Graph::ring(int n) {
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

int Graph::add_node() {
  adj_.emplace_back();
  return static_cast<int>(adj_.size()) - 1;
}

int Graph::remove_node(int v) {
  // detach v
  for (int u : adj_[v]) {
    auto& a = adj_[u];
    a.erase(std::find(a.begin(), a.end(), v));
  }
  adj_[v].clear();
  const int last = static_cast<int>(adj_.size()) - 1;
  if (v != last) {
    // rename node `last` to `v`
    adj_[v] = std::move(adj_[last]);
    for (int u : adj_[v]) {
      auto& a = adj_[u];
      *std::find(a.begin(), a.end(), last) = v;
    }
  }
  adj_.pop_back();
  return v == last ? -1 : last;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("Graph: self loop");
  if (has_edge(u, v)) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void Graph::remove_edge(int u, int v) {
  auto& au = adj_[u];
  auto it = std::find(au.begin(), au.end(), v);
  if (it == au.end()) return;
  au.erase(it);
  auto& av = adj_[v];
  av.erase(std::find(av.begin(), av.end(), u));
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), target) != a.end();
}

bool Graph::connected() const {
  const int n = size();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int found = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++found;
        queue.push_back(v);
      }
    }
  }
  return found == n;
}

long Graph::edge_count() const {
  long total = 0;
  for (const auto& a : adj_) total += static_cast<long>(a.size());
  return total / 2;
}

bool Graph::invariants_hold() const {
  for (int u = 0; u < size(); ++u) {
    std::vector<int> seen;
    for (int v : adj_[u]) {
      if (v == u) return false;
      if (v < 0 || v >= size()) return false;
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
      seen.push_back(v);
      const auto& back = adj_[v];
      if (std::find(back.begin(), back.end(), u) == back.end()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// metrics
// ---------------------------------------------------------------------------

double clustering(const Graph& g, int i) {
  const auto& nb = g.neighbors(i);
  const int k = static_cast<int>(nb.size());
  if (k < 2) return 0.0;
  int e = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(nb[a], nb[b])) ++e;
  return 2.0 * e / (static_cast<double>(k) * (k - 1));
}

namespace {

// least squares slope of y on x; returns 0 for degenerate x
double ls_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

}  // namespace

TopologyMetrics topology_metrics(const Graph& g) {
  TopologyMetrics m;
  const int n = g.size();
  if (n == 0) return m;

  long degree_sum = 0;
  int k_max = 0;
  for (int i = 0; i < n; ++i) {
    degree_sum += g.degree(i);
    k_max = std::max(k_max, g.degree(i));
  }
  m.k_ave = static_cast<double>(degree_sum) / n;
  m.degree_histogram.assign(k_max + 1, 0);
  for (int i = 0; i < n; ++i) ++m.degree_histogram[g.degree(i)];

  // BFS from every node
  double dist_sum = 0.0;
  long pair_count = 0;
  std::vector<int> dist(n);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int t = s + 1; t < n; ++t) {
      if (dist[t] < 0) {
        m.connected = false;
      } else {
        dist_sum += dist[t];
        ++pair_count;
      }
    }
  }
  m.path_length = pair_count > 0 ? dist_sum / pair_count : 0.0;

  std::vector<double> ks, cs, knns;
  ks.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int k = g.degree(i);
    if (k < 1) continue;
    double knn = 0.0;
    for (int v : g.neighbors(i)) knn += g.degree(v);
    knn /= k;
    ks.push_back(k);
    cs.push_back(clustering(g, i));
    knns.push_back(knn);
  }
  double c_total = 0.0;
  for (int i = 0; i < n; ++i) c_total += clustering(g, i);
  m.c_ave = c_total / n;
  m.ck_slope = ls_slope(ks, cs);
  m.knn_slope = ls_slope(ks, knns);
  m.l_rand = (m.k_ave > 1.0 && n > 1) ? std::log(n) / std::log(m.k_ave) : 0.0;
  m.c_rand = m.k_ave / n;
  return m;
}

// ---------------------------------------------------------------------------
// SOTEA I rules
// ---------------------------------------------------------------------------

double epistatic_fitness(const Graph& g, std::span<const double> scores, int i) {
  const int k = g.degree(i);
  if (k < 1) throw std::invalid_argument("epistatic_fitness: isolated node");
  // self-inclusive rank, 1 = best; ties by lower node id
  int rank = 1;
  for (int v : g.neighbors(i)) {
    if (scores[v] < scores[i] || (scores[v] == scores[i] && v < i)) ++rank;
  }
  return static_cast<double>(k - rank + 1) / k;
}

int sotea1_reproduce(Graph& g, int parent, const Sotea1Params& params, Rng& rng) {
  const int child = g.add_node();
  // copy of the parent's links, sampled before mutation of the graph
  const std::vector<int> parent_links = g.neighbors(parent);
  g.add_edge(child, parent);
  for (int u : parent_links) {
    if (rng.bernoulli(params.p_add)) {
      g.add_edge(child, u);
      if (rng.bernoulli(params.p_remove)) g.remove_edge(parent, u);
    }
  }
  return child;
}

int ring_reproduce(Graph& g, int parent, Rng& rng) {
  const int child = g.add_node();
  // transfer one of the parent's links (not the new one) to the child
  const std::vector<int> links = g.neighbors(parent);
  g.add_edge(child, parent);
  if (!links.empty()) {
    const int moved = links[rng.uniform_index(links.size())];
    g.remove_edge(parent, moved);
    g.add_edge(child, moved);
  }
  return child;
}

std::pair<int, int> sotea1_compete(const Graph& g, int selected,
                                   std::span<const double> scores) {
  const auto& nb = g.neighbors(selected);
  if (nb.empty()) throw std::invalid_argument("sotea1_compete: no neighbors");
  int worst = nb[0];
  for (int v : nb) {
    if (scores[v] > scores[worst] || (scores[v] == scores[worst] && v < worst))
      worst = v;
  }
  // worse of the pair dies; the incumbent (selected) survives ties
  if (scores[selected] > scores[worst]) return {worst, selected};
  return {selected, worst};
}

int absorb_and_remove(Graph& g, int winner, int loser) {
  const std::vector<int> links = g.neighbors(loser);
  for (int u : links) {
    if (u != winner && !g.has_edge(winner, u)) g.add_edge(winner, u);
  }
  return g.remove_node(loser);
}

// ---------------------------------------------------------------------------
// SOTEA II rules
// ---------------------------------------------------------------------------

double sotea2_kset(int rank, int n, const Sotea2Params& params) {
  const double frac = static_cast<double>(n - rank) / n;
  return params.k_min + (params.k_max - params.k_min) * frac * frac;
}

double weighted_clustering(const Graph& g, std::span<const int> ranks, int i) {
  const auto& nb = g.neighbors(i);
  const int k = static_cast<int>(nb.size());
  if (k < 2) return 0.0;
  const double n2 = static_cast<double>(ranks.size()) * ranks.size();
  double e = 0.0;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.has_edge(nb[a], nb[b]))
        e += static_cast<double>(ranks[nb[a]]) * ranks[nb[b]] / n2;
    }
  }
  return 2.0 * e / (static_cast<double>(k) * (k - 1));
}

std::optional<std::pair<int, int>> two_step_walk(const Graph& g, int n1, Rng& rng) {
  const auto& nb1 = g.neighbors(n1);
  if (nb1.empty()) return std::nullopt;
  const int n2 = nb1[rng.uniform_index(nb1.size())];
  const auto& nb2 = g.neighbors(n2);
  const int n3 = nb2[rng.uniform_index(nb2.size())];
  if (n3 == n1) return std::nullopt;  // failed walk
  return std::make_pair(n2, n3);
}

void sotea2_rewire(Graph& g, int n1, std::span<const int> ranks,
                   std::span<const double> kset, const Sotea2Params& params,
                   Rng& rng) {
  // Add: link n1-n3 when both sit strictly below their set points.
  for (int t = 0; t < params.walk_retries; ++t) {
    auto walk = two_step_walk(g, n1, rng);
    if (!walk) continue;
    const int n3 = walk->second;
    if (g.degree(n1) < kset[n1] && g.degree(n3) < kset[n3] &&
        !g.has_edge(n1, n3)) {
      g.add_edge(n1, n3);
      break;
    }
  }
  // Remove: drop an existing n1-n3 when both exceed their set points; the
  // shared middle node keeps the graph connected.
  if (g.degree(n1) > kset[n1]) {
    for (int t = 0; t < params.walk_retries; ++t) {
      auto walk = two_step_walk(g, n1, rng);
      if (!walk) continue;
      const int n3 = walk->second;
      if (g.has_edge(n1, n3) && g.degree(n3) > kset[n3]) {
        g.remove_edge(n1, n3);
        break;
      }
    }
  }
  // Transfer: move n1-n2 to n1-n3 when n3 wants links and the summed local
  // weighted clustering strictly improves; otherwise revert.
  for (int t = 0; t < params.walk_retries; ++t) {
    auto walk = two_step_walk(g, n1, rng);
    if (!walk) continue;
    const auto [n2, n3] = *walk;
    if (g.has_edge(n1, n3)) continue;
    if (g.degree(n3) >= kset[n3]) continue;
    const double before = weighted_clustering(g, ranks, n1) +
                          weighted_clustering(g, ranks, n2) +
                          weighted_clustering(g, ranks, n3);
    g.remove_edge(n1, n2);
    g.add_edge(n1, n3);
    const double after = weighted_clustering(g, ranks, n1) +
                         weighted_clustering(g, ranks, n2) +
                         weighted_clustering(g, ranks, n3);
    if (after > before) break;  // keep
    g.remove_edge(n1, n3);
    g.add_edge(n1, n2);  // revert
  }
}

// ---------------------------------------------------------------------------
// diversity
// ---------------------------------------------------------------------------

double diversity(std::span<const Genome> genomes, std::span<const GeneSpec> spec,
                 std::span<const std::size_t> subset) {
  if (subset.size() < 2) throw std::invalid_argument("diversity: subset < 2");
  const double n_bits = static_cast<double>(spec.size());
  long ham_sum = 0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      ham_sum += hamming_distance(genomes[subset[a]], genomes[subset[b]], spec);
    }
  }
  const double n = static_cast<double>(subset.size());
  // ordered pairs divided by the random expectation n_bits/2
  return (2.0 * ham_sum) / (n * (n - 1.0) * (n_bits / 2.0));
}

// ---------------------------------------------------------------------------
// baseline generators
// ---------------------------------------------------------------------------

Graph ba_network(int n, int m0, int m, Rng& rng) {
  if (m0 < 1 || m > m0 || n < m0)
    throw std::invalid_argument("ba_network: need 1 <= m <= m0 <= n");
  Graph g(m0);
  for (int i = 1; i < m0; ++i) g.add_edge(i - 1, i);  // connected seed path
  std::vector<int> endpoints;  // degree-proportional sampling pool
  for (int i = 0; i < m0; ++i)
    for (int v : g.neighbors(i)) endpoints.push_back(v);
  if (endpoints.empty()) endpoints.push_back(0);  // m0 == 1 seed
  while (g.size() < n) {
    const int v = g.add_node();
    std::vector<int> targets;
    int guard = 0;
    while (static_cast<int>(targets.size()) < m && guard++ < 10000) {
      const int t = endpoints[rng.uniform_index(endpoints.size())];
      if (t == v) continue;
      if (std::find(targets.begin(), targets.end(), t) != targets.end()) continue;
      targets.push_back(t);
    }
    for (int t : targets) {
      g.add_edge(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return g;
}

Graph dd_network(int n, double delta, Rng& rng) {
  Graph g(2);
  g.add_edge(0, 1);
  while (g.size() < n) {
    const int src = rng.uniform_int(0, g.size() - 1);
    const int dup = g.add_node();
    const double alpha = 0.06 / g.size();
    const std::vector<int> links = g.neighbors(src);
    for (int u : links) {
      if (!rng.bernoulli(delta)) g.add_edge(dup, u);  // survive deletion
    }
    for (int u = 0; u < g.size(); ++u) {
      if (u == dup || g.has_edge(dup, u)) continue;
      if (rng.bernoulli(alpha)) g.add_edge(dup, u);
    }
  }
  return g;
}

Graph fitness_model_network(int n, Rng& rng) {
  std::vector<double> x(n);
  double x_max = 0.0;
  for (auto& v : x) {
    v = -std::log(1.0 - rng.uniform());  // exponential(1)
    x_max = std::max(x_max, v);
  }
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(x[i] * x[j] / (x_max * x_max))) g.add_edge(i, j);
  return g;
}

Graph er_network(int n, double p, Rng& rng) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.add_edge(i, j);
  return g;
}

}  // namespace evodyn
