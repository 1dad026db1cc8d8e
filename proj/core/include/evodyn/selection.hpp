#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "evodyn/rng.hpp"

namespace evodyn {

/// mu parents, lambda offspring, max age kappa (infinity allowed). kappa = 1
/// is generational, kappa = inf with mu = lambda is pseudo steady state.
/// `elitist` pins the best parent regardless of age.
struct UpdatePolicy {
  int mu = 30;
  int lambda = 30;
  double kappa = std::numeric_limits<double>::infinity();
  bool elitist = false;
};

enum class SelectionScheme { Tournament, Truncation, Random, LinearRank,
                             ExponentialRank, Proportional, ModifiedTournament };

struct SelectionConfig {
  SelectionScheme scheme = SelectionScheme::Tournament;
  int q = 2;            // tournament size
  double T = 0.5;       // truncation fraction
  double c = 0.95;      // exponential ranking base, 0 < c < 1
  double eta_plus = 1.0, eta_minus = 0.0;  // linear ranking
  bool with_replacement = false;
};

/// Probabilistic bubble sort over (F, phi): adjacent pairs compare by F when
/// both are feasible or with probability pf, otherwise by phi. `sweeps`
/// passes at most, early exit on a clean sweep. Returns the indices in ranked
/// order, best (minimal) first.
std::vector<std::size_t> stochastic_rank(std::span<const double> f,
                                         std::span<const double> phi,
                                         double pf, int sweeps, Rng& rng);

/// Best of q uniform draws under scores (lower better). Ties keep the earlier
/// drawn/lower index.
std::size_t tournament_select(std::span<const double> scores, int q, Rng& rng,
                              bool with_replacement = false);

/// The floor(T*N) best, each exactly once, ties broken by original index.
std::vector<std::size_t> truncation_select(std::span<const double> scores,
                                           double T);

/// One categorical draw by linear rank (eta+ = 1, eta- = 0 default),
/// exponential rank (base c) or raw proportional weights. Proportional
/// requires strictly positive fitness values (maximization weights).
std::size_t linear_rank_select(std::span<const double> scores, double eta_plus,
                               double eta_minus, Rng& rng);
std::size_t exponential_rank_select(std::span<const double> scores, double c,
                                    Rng& rng);
std::size_t proportional_select(std::span<const double> fitness, Rng& rng);

/// lambda binary tournaments over a pool of lambda+mu, each removing the
/// worse of two distinct uniform picks; the mu survivors are returned (in
/// original pool order). This is also the survival loop of the reference
/// steady-state design when lambda = pool - mu.
std::vector<std::size_t> modified_tournament_step(std::span<const double> scores,
                                                  int removals, Rng& rng);

/// Deterministic Crowding over an externally owned population. Pairs the
/// population without replacement, makes two children per pair, matches
/// children to the closer parent by summed distance and replaces a parent
/// only when the child is strictly fitter (scores: lower better).
/// `make_children(i, j)` returns the two children's population-external
/// scores and commits them via `replace(slot, child_index)`.
struct CrowdingCallbacks {
  // distance between population member i and child c of the current pair
  std::function<double(std::size_t parent, int child)> distance;
  std::function<double(int child)> child_score;
  std::function<void(std::size_t parent, int child)> replace;
};
void deterministic_crowding_generation(std::size_t population_size,
                                       std::span<const double> parent_scores,
                                       const std::function<void(std::size_t, std::size_t)>& breed_pair,
                                       const CrowdingCallbacks& cb, Rng& rng);

}  // namespace evodyn
