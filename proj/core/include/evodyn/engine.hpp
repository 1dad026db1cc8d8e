#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "evodyn/adaptation.hpp"
#include "evodyn/etv.hpp"
#include "evodyn/objectives.hpp"
#include "evodyn/operators.hpp"
#include "evodyn/population.hpp"
#include "evodyn/selection.hpp"
#include "evodyn/topology.hpp"

namespace evodyn {

enum class AlgorithmFamily { Panmictic, Cga, Sotea1, Sotea2 };
enum class UpdateKind { Generational, SteadyState };

/// Probability-control designs. Static2 pins uniform crossover at 0.98 and
/// point mutation at 0.02; Static10 uses every operator equally; the rest
/// adapt through the supervisory controller.
enum class AdaptiveMethod {
  Static2, Static10,
  IParent, IMedian, IRank,
  IParentPursuit, IMedianPursuit, IRankPursuit,
  Etv, EtvOutlier,
};

AlgorithmFamily family_from_name(const std::string& s);
const char* family_name(AlgorithmFamily f);
AdaptiveMethod adaptive_from_name(const std::string& s);
const char* adaptive_name(AdaptiveMethod m);
const char* update_name(UpdateKind u);
const char* selection_name(SelectionScheme s);
SelectionScheme selection_from_name(const std::string& s);
UpdateKind update_from_name(const std::string& s);

struct RunConfig {
  std::string problem = "quadratic";
  AlgorithmFamily family = AlgorithmFamily::Panmictic;
  int population = 30;
  long generations = 3000;
  std::uint64_t seed = 1;

  // panmictic update/selection
  UpdateKind update = UpdateKind::SteadyState;
  SelectionScheme selection = SelectionScheme::Tournament;
  int tour_q = 2;
  double trunc_t = 0.5;
  double exp_c = 0.95;
  bool elitist = true;  // applies to generational updating

  std::string operator_set = "ops10";
  AdaptiveMethod adapt = AdaptiveMethod::Static10;
  double ctrl_alpha = 0.8, ctrl_beta = 0.8, ctrl_p_min = 0.02;
  int ctrl_tau = 10;

  // constrained handling
  double pf = 0.45;
  int sr_sweeps = 0;  // 0 = pool size

  // cGA
  int radius = 1;

  // SOTEA model I
  double p_add = 0.1, p_remove = 0.1;
  std::string sotea1_fitness = "epistatic";  // epistatic | objective
  std::string sotea1_net = "sotea";          // sotea | ring | panmictic
  double bitflip_rate = 0.0;                 // 0 = 2/n_bits

  // SOTEA model II
  Sotea2Params sotea2;

  // impact measurement
  bool track_etv = true;
  int t_obs = 20;
  double p_new = 0.0;
  bool record_genealogy = false;

  // telemetry
  bool telemetry_topology = false;
  int topology_every = 50;
  int edges_every = 0;       // 0 = no edge snapshots
  bool telemetry_diversity = false;
  int diversity_every = 20;

  // streaming consumer for finalized takeover records; when set the records
  // are not retained in the result
  std::function<void(const EtvRecord&)> etv_sink;
  // called after every completed generation (progress reporting)
  std::function<void(long)> progress;

  void validate() const;  // throws std::invalid_argument
};

struct ProbabilityRow {
  int cycle = 0;
  int op = 0;
  double reward = 0.0, quality = 0.0, probability = 0.0;
};

struct TopologyRow {
  long gen = 0;
  double path_length = 0.0, k_ave = 0.0, c_ave = 0.0, ck_slope = 0.0,
         knn_slope = 0.0;
};

struct DiversityRow {
  long gen = 0;
  double all = 0.0, top20 = 0.0;
};

struct EdgeSnapshot {
  long gen = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, u < v
};

struct RunResult {
  // per generation 1..G: best objective among feasible members (natural
  // direction), and whether any feasible member existed
  std::vector<double> best_f;
  std::vector<char> feasible;

  bool found_feasible = false;
  double best_overall_f = 0.0;  // best feasible seen across the whole run
  Genome best_genome;
  Evaluation best_eval;
  long evaluations = 0;

  std::vector<EtvRecord> etv;  // empty when an etv_sink is set
  std::vector<std::size_t> etv_active_per_gen;
  std::vector<ProbabilityRow> probabilities;
  std::vector<TopologyRow> topology;
  std::vector<DiversityRow> diversity;
  std::vector<EdgeSnapshot> edges;
  std::shared_ptr<const Genealogy> genealogy;  // when record_genealogy
};

RunResult run(const RunConfig& config);

/// Independent runs over the cross product of configs and seeds (seeds are
/// shared across configs for blocking). Results are keyed (config, seed):
/// results[c * seeds.size() + s]. Execution order never affects content.
std::vector<RunResult> run_batch(std::span<const RunConfig> configs,
                                 std::span<const std::uint64_t> seeds,
                                 int jobs = 1);

}  // namespace evodyn
