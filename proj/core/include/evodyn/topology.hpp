#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "evodyn/genome.hpp"
#include "evodyn/rng.hpp"

namespace evodyn {

/// Undirected simple graph over population slots. Adjacency lists; node
/// removal swaps the last slot in, callers that keep parallel arrays get the
/// moved index back.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  static Graph ring(int n);
  static Graph complete(int n);

  int size() const { return static_cast<int>(adj_.size()); }
  int add_node();
  /// Removes `v` by swapping the last node into its slot. Returns the index
  /// that was moved into `v` (== old last index), or -1 if `v` was last.
  int remove_node(int v);

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool connected() const;
  long edge_count() const;
  /// symmetry, no self loops, no duplicate edges
  bool invariants_hold() const;

 private:
  std::vector<std::vector<int>> adj_;
};

struct TopologyMetrics {
  double path_length = 0.0;       // mean shortest path over pairs
  double k_ave = 0.0;
  double c_ave = 0.0;
  double ck_slope = 0.0;          // least squares c_i vs k_i
  double knn_slope = 0.0;         // assortativity: k_nn vs k
  double l_rand = 0.0;            // ln(N)/ln(k_ave)
  double c_rand = 0.0;            // k_ave/N
  std::vector<int> degree_histogram;
  bool connected = true;
};

/// Fraction of a node's neighbor pairs that are themselves linked; 0 for
/// degree < 2.
double clustering(const Graph& g, int i);

/// BFS path lengths, degree/clustering means, the two correlation slopes and
/// the random-graph baselines. Sets `connected = false` (and computes L over
/// reachable pairs only) on disconnected graphs.
TopologyMetrics topology_metrics(const Graph& g);

/// Rank of the node's score among itself and its neighbors (1 = best, ties
/// by lower node id), scaled so rank 1 -> 1 and rank k+1 -> 0. Scores are
/// minimization keys. Throws for isolated nodes.
double epistatic_fitness(const Graph& g, std::span<const double> scores, int i);

struct Sotea1Params {
  double p_add = 0.10;
  double p_remove = 0.10;
};

/// Growth step: offspring node linked to its parent, inheriting each parent
/// link with probability p_add; inherited links detach from the parent with
/// probability p_remove. Returns the new node.
int sotea1_reproduce(Graph& g, int parent, const Sotea1Params& params, Rng& rng);

/// Ring-preserving growth used by the companion cellular design: offspring
/// links to the parent and takes over one of the parent's other links.
int ring_reproduce(Graph& g, int parent, Rng& rng);

/// Competition: `selected` fights its worst neighbor (by score, lower
/// better; ties to the lower node id); the worse of the two dies and the
/// winner absorbs the loser's links. Returns {winner, loser}.
std::pair<int, int> sotea1_compete(const Graph& g, int selected,
                                   std::span<const double> scores);

/// Absorb `loser`'s links into `winner` and drop the loser node. Returns the
/// index moved into the loser's slot (see Graph::remove_node).
int absorb_and_remove(Graph& g, int winner, int loser);

struct Sotea2Params {
  int k_min = 3;
  int k_max = 7;
  int walk_retries = 10;
};

/// Target degree: k_min + (k_max-k_min)*((N-rank)/N)^2, rank 1 = best.
double sotea2_kset(int rank, int n, const Sotea2Params& params);

/// Clustering with each closing edge (j,k) weighted by rank_j*rank_k/N^2
/// (worse-ranked neighbors weigh more). `ranks` are 1-based, 1 = best.
double weighted_clustering(const Graph& g, std::span<const int> ranks, int i);

/// Uniform two-step walk n1 -> n2 -> n3; empty when n3 == n1.
std::optional<std::pair<int, int>> two_step_walk(const Graph& g, int n1, Rng& rng);

/// Apply the Add, Remove and Transfer rewiring rules (in that order) for
/// node n1, each attempted over up to walk_retries fresh walks.
void sotea2_rewire(Graph& g, int n1, std::span<const int> ranks,
                   std::span<const double> kset, const Sotea2Params& params,
                   Rng& rng);

/// Mean pairwise Hamming distance over the subset, normalized by the
/// random-population expectation n_bits/2. `subset` indexes into `genomes`.
double diversity(std::span<const Genome> genomes, std::span<const GeneSpec> spec,
                 std::span<const std::size_t> subset);

// ---- baseline generators (metric comparison only) ----

Graph ba_network(int n, int m0, int m, Rng& rng);
Graph dd_network(int n, double delta, Rng& rng);  // link-add prob 0.06/N
Graph fitness_model_network(int n, Rng& rng);     // exponential node fitness
Graph er_network(int n, double p, Rng& rng);

}  // namespace evodyn
