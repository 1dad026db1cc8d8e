#pragma once

#include <span>
#include <string>
#include <vector>

#include "evodyn/rng.hpp"

namespace evodyn {

/// Measurement interpretations. Fitness kinds assume maximization (the engine
/// negates minimization objectives before interpreting). RawEtv feeds the
/// takeover size straight through; Outlier scores each event by the
/// improbability that its size arose from the pooled lognormal background.
enum class InterpretationKind { I1, I2, I3, I4, I5, I6, I7, I8, RawEtv, Outlier };

enum class ProbabilityStrategy { Matching, Pursuit };

struct FitnessContext {
  double f_parent = 0.0;   // best parent
  double f_median = 0.0;
  double f_best = 0.0;
  double f_90th = 0.0;
  std::span<const double> population_f;  // needed by I8 only
};

double interpret(InterpretationKind kind, double f_offspring,
                 const FitnessContext& ctx);

/// Standard-normal upper tail P(Z > z).
double normal_upper_tail(double z);

/// Probability that none of m draws reaches the observed value:
/// (1 - p_z)^m, the m-th power of the complementary tail.
double p_alpha(double p_z, int m);

/// Per-operator Outlier rewards for one adaptation cycle. Events carry
/// (operator index, takeover size >= 1). The log sizes are pooled across all
/// operators for the background mean/sd (sample sd, n-1); each event scores
/// p_alpha against its operator's sample size and an operator's reward is the
/// sum of its events' scores. Degenerate spread (or a single event in the
/// cycle) yields zero everywhere.
std::vector<double> outlier_rewards(
    std::span<const std::pair<int, int>> events, int n_ops);

struct ControllerConfig {
  int n_ops = 10;
  double alpha = 0.8;   // quality memory
  double beta = 0.8;    // pursuit rate
  double p_min = 0.02;  // probability floor
  int tau = 10;         // generations per adaptation cycle
  ProbabilityStrategy strategy = ProbabilityStrategy::Matching;
  InterpretationKind interpretation = InterpretationKind::I8;
};

/// Supervisory operator-probability controller: interpretations accumulate
/// into per-operator archives during a cycle; every tau generations rewards,
/// qualities and probabilities are recomputed and the archives reset.
class Controller {
 public:
  explicit Controller(ControllerConfig cfg);

  void record_interpretation(int op, double value);
  /// Raw / Outlier paths: finalized takeover sizes gathered during the cycle.
  void record_etv_event(int op, int etv_size);

  /// Reward -> quality -> probability step; call every tau generations.
  void cycle_update();

  const std::vector<double>& probabilities() const { return p_; }
  const std::vector<double>& qualities() const { return q_; }
  const std::vector<double>& last_rewards() const { return r_; }
  const ControllerConfig& config() const { return cfg_; }
  int cycles() const { return t_; }

  double p_max() const;

 private:
  ControllerConfig cfg_;
  std::vector<double> q_, p_, r_;
  std::vector<std::vector<double>> archive_;          // fitness interpretations
  std::vector<std::pair<int, int>> etv_batch_;        // (op, size) this cycle
  std::vector<int> m_;                                // events per operator
  int t_ = 0;
};

}  // namespace evodyn
