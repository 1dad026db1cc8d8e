#include "evodyn/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace evodyn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double obj_score(Direction dir, double f) {
  return dir == Direction::Minimize ? f : -f;
}

struct NameTable {
  const char* name;
  int value;
};

}  // namespace

AlgorithmFamily family_from_name(const std::string& s) {
  if (s == "panmictic") return AlgorithmFamily::Panmictic;
  if (s == "cga") return AlgorithmFamily::Cga;
  if (s == "sotea1") return AlgorithmFamily::Sotea1;
  if (s == "sotea2") return AlgorithmFamily::Sotea2;
  throw std::invalid_argument("unknown algorithm family: " + s);
}

const char* family_name(AlgorithmFamily f) {
  switch (f) {
    case AlgorithmFamily::Panmictic: return "panmictic";
    case AlgorithmFamily::Cga: return "cga";
    case AlgorithmFamily::Sotea1: return "sotea1";
    case AlgorithmFamily::Sotea2: return "sotea2";
  }
  return "?";
}

AdaptiveMethod adaptive_from_name(const std::string& s) {
  if (s == "static2") return AdaptiveMethod::Static2;
  if (s == "static10") return AdaptiveMethod::Static10;
  if (s == "i_parent") return AdaptiveMethod::IParent;
  if (s == "i_median") return AdaptiveMethod::IMedian;
  if (s == "i_rank") return AdaptiveMethod::IRank;
  if (s == "i_parent_pursuit") return AdaptiveMethod::IParentPursuit;
  if (s == "i_median_pursuit") return AdaptiveMethod::IMedianPursuit;
  if (s == "i_rank_pursuit") return AdaptiveMethod::IRankPursuit;
  if (s == "etv") return AdaptiveMethod::Etv;
  if (s == "etv_outlier") return AdaptiveMethod::EtvOutlier;
  throw std::invalid_argument("unknown adaptive method: " + s);
}

const char* adaptive_name(AdaptiveMethod m) {
  switch (m) {
    case AdaptiveMethod::Static2: return "static2";
    case AdaptiveMethod::Static10: return "static10";
    case AdaptiveMethod::IParent: return "i_parent";
    case AdaptiveMethod::IMedian: return "i_median";
    case AdaptiveMethod::IRank: return "i_rank";
    case AdaptiveMethod::IParentPursuit: return "i_parent_pursuit";
    case AdaptiveMethod::IMedianPursuit: return "i_median_pursuit";
    case AdaptiveMethod::IRankPursuit: return "i_rank_pursuit";
    case AdaptiveMethod::Etv: return "etv";
    case AdaptiveMethod::EtvOutlier: return "etv_outlier";
  }
  return "?";
}

const char* update_name(UpdateKind u) {
  return u == UpdateKind::Generational ? "gen" : "ss";
}

UpdateKind update_from_name(const std::string& s) {
  if (s == "gen") return UpdateKind::Generational;
  if (s == "ss") return UpdateKind::SteadyState;
  throw std::invalid_argument("unknown update kind: " + s);
}

const char* selection_name(SelectionScheme s) {
  switch (s) {
    case SelectionScheme::Tournament: return "tour";
    case SelectionScheme::Truncation: return "trun";
    case SelectionScheme::Random: return "rand";
    case SelectionScheme::LinearRank: return "linrank";
    case SelectionScheme::ExponentialRank: return "exprank";
    case SelectionScheme::Proportional: return "prop";
    case SelectionScheme::ModifiedTournament: return "modtour";
  }
  return "?";
}

SelectionScheme selection_from_name(const std::string& s) {
  if (s == "tour") return SelectionScheme::Tournament;
  if (s == "trun") return SelectionScheme::Truncation;
  if (s == "rand") return SelectionScheme::Random;
  if (s == "linrank") return SelectionScheme::LinearRank;
  if (s == "exprank") return SelectionScheme::ExponentialRank;
  if (s == "prop") return SelectionScheme::Proportional;
  if (s == "modtour") return SelectionScheme::ModifiedTournament;
  throw std::invalid_argument("unknown selection scheme: " + s);
}

void RunConfig::validate() const {
  if (population < 2) throw std::invalid_argument("config: population < 2");
  if (generations < 0) throw std::invalid_argument("config: negative generations");
  if (family == AlgorithmFamily::Cga && radius * 2 >= population)
    throw std::invalid_argument("config: cGA radius must satisfy 2R < N");
  if (family == AlgorithmFamily::Cga && radius < 1)
    throw std::invalid_argument("config: cGA radius < 1");
  if (pf < 0.0 || pf > 1.0) throw std::invalid_argument("config: bad pf");
  if (p_new < 0.0 || p_new > 1.0) throw std::invalid_argument("config: bad p_new");
  if (t_obs < 1) throw std::invalid_argument("config: t_obs < 1");
  if (sotea2.k_min > sotea2.k_max)
    throw std::invalid_argument("config: k_min > k_max");
}

namespace {

// ---------------------------------------------------------------------------
// shared run machinery
// ---------------------------------------------------------------------------

struct RunContext;
void assign_rank_scores(RunContext& ctx, std::vector<Individual*>& pool);

struct RunContext {
  const RunConfig& cfg;
  std::unique_ptr<Objective> objective;
  std::span<const GeneSpec> specs;
  Direction direction;
  bool constrained = false;
  std::vector<OperatorSpec> ops;
  std::vector<double> op_p;  // current usage probabilities
  std::unique_ptr<Controller> controller;
  std::unique_ptr<EtvTracker> tracker;
  RunResult result;

  Rng rng_init, rng_op, rng_parent, rng_survival, rng_etv, rng_topology,
      rng_sr, rng_compare;

  explicit RunContext(const RunConfig& c)
      : cfg(c),
        rng_init(0), rng_op(0), rng_parent(0), rng_survival(0), rng_etv(0),
        rng_topology(0), rng_sr(0), rng_compare(0) {
    Rng master(c.seed);
    rng_init = master.split(1);
    rng_op = master.split(2);
    rng_parent = master.split(3);
    rng_survival = master.split(4);
    rng_etv = master.split(5);
    rng_topology = master.split(6);
    rng_sr = master.split(7);
    rng_compare = master.split(8);

    objective = make_objective(c.problem);
    specs = objective->spec().gene_specs;
    direction = objective->spec().direction;
    constrained = objective->spec().constraint_count > 0;

    ops = operator_set(c.operator_set);
    op_p = static_probabilities(ops, c.operator_set);

    if (adaptive(c.adapt)) {
      ControllerConfig cc;
      cc.n_ops = static_cast<int>(ops.size());
      cc.alpha = c.ctrl_alpha;
      cc.beta = c.ctrl_beta;
      cc.p_min = c.ctrl_p_min;
      cc.tau = c.ctrl_tau;
      cc.strategy = pursuit(c.adapt) ? ProbabilityStrategy::Pursuit
                                     : ProbabilityStrategy::Matching;
      cc.interpretation = interpretation_of(c.adapt);
      controller = std::make_unique<Controller>(cc);
      op_p = controller->probabilities();
    }
    if (c.track_etv)
      tracker = std::make_unique<EtvTracker>(EtvConfig{c.t_obs, c.p_new},
                                             c.record_genealogy);
  }

  static bool adaptive(AdaptiveMethod m) {
    return m != AdaptiveMethod::Static2 && m != AdaptiveMethod::Static10;
  }
  static bool pursuit(AdaptiveMethod m) {
    return m == AdaptiveMethod::IParentPursuit ||
           m == AdaptiveMethod::IMedianPursuit ||
           m == AdaptiveMethod::IRankPursuit;
  }
  static bool etv_driven(AdaptiveMethod m) {
    return m == AdaptiveMethod::Etv || m == AdaptiveMethod::EtvOutlier;
  }
  static InterpretationKind interpretation_of(AdaptiveMethod m) {
    switch (m) {
      case AdaptiveMethod::IParent:
      case AdaptiveMethod::IParentPursuit: return InterpretationKind::I1;
      case AdaptiveMethod::IMedian:
      case AdaptiveMethod::IMedianPursuit: return InterpretationKind::I4;
      case AdaptiveMethod::IRank:
      case AdaptiveMethod::IRankPursuit: return InterpretationKind::I8;
      case AdaptiveMethod::Etv: return InterpretationKind::RawEtv;
      case AdaptiveMethod::EtvOutlier: return InterpretationKind::Outlier;
      default: return InterpretationKind::I8;
    }
  }

  double score_of(const Evaluation& eval) const {
    return obj_score(direction, eval.f);
  }

  Individual make_individual(Genome x, int age) {
    Individual ind;
    ind.x = std::move(x);
    ind.eval = objective->evaluate(ind.x);
    ind.score = score_of(ind.eval);
    ind.age = age;
    ++result.evaluations;
    return ind;
  }

  void etv_birth(Individual& child, int op_index,
                 std::span<const Individual* const> parents, long gen) {
    if (!tracker) return;
    std::vector<const Genome*> genomes;
    genomes.reserve(parents.size());
    for (const auto* p : parents) genomes.push_back(&p->x);
    const std::size_t dom = dominant_parent(child.x, genomes, specs);
    child.event_id =
        tracker->record_birth(op_index, gen, parents[dom]->history,
                              parents[dom]->event_id, rng_etv, child.history);
  }

  void etv_founder(Individual& ind, long gen) {
    if (!tracker) return;
    static const std::vector<std::uint64_t> kNoHistory;
    ind.event_id = tracker->record_birth(-1, gen, kNoHistory, 0, rng_etv,
                                         ind.history);
  }

  void etv_pass(const std::vector<Individual>& pop, long gen) {
    if (!tracker) return;
    std::vector<const std::vector<std::uint64_t>*> hists;
    hists.reserve(pop.size());
    for (const auto& ind : pop) hists.push_back(&ind.history);
    tracker->generation_pass(hists, gen);
    result.etv_active_per_gen.push_back(tracker->active_count());
    drain_etv();
  }

  void drain_etv() {
    if (!tracker) return;
    auto records = tracker->take_finalized();
    if (controller && etv_driven(cfg.adapt)) {
      for (const auto& r : records)
        if (r.op >= 0 && !r.censored)
          controller->record_etv_event(r.op, r.size);
    }
    if (cfg.etv_sink) {
      for (const auto& r : records) cfg.etv_sink(r);
    } else {
      result.etv.insert(result.etv.end(), records.begin(), records.end());
    }
  }

  void maybe_cycle_update(long gen) {
    if (!controller) return;
    if (gen % cfg.ctrl_tau != 0) return;
    controller->cycle_update();
    op_p = controller->probabilities();
    const auto& r = controller->last_rewards();
    const auto& q = controller->qualities();
    for (std::size_t i = 0; i < op_p.size(); ++i) {
      result.probabilities.push_back({controller->cycles(),
                                      static_cast<int>(i), r[i], q[i],
                                      op_p[i]});
    }
  }

  /// Synchronous replacement decisions for one offspring per cell: on
  /// constrained problems both generations are ranked together once (the
  /// stochastic ranking is per generation, never per comparison) and a child
  /// replaces its cell owner only when it ranks strictly higher; otherwise
  /// the raw minimization scores decide.
  std::vector<char> replace_decisions(std::vector<Individual>& pop,
                                      std::vector<Individual>& children) {
    const std::size_t n = pop.size();
    std::vector<char> take(n, 0);
    if (constrained) {
      std::vector<Individual*> ptrs;
      ptrs.reserve(2 * n);
      for (auto& ind : pop) ptrs.push_back(&ind);
      for (auto& ind : children) ptrs.push_back(&ind);
      assign_rank_scores(*this, ptrs);
      for (std::size_t i = 0; i < n; ++i)
        take[i] = children[i].score < pop[i].score;
    } else {
      for (std::size_t i = 0; i < n; ++i)
        take[i] = children[i].score < pop[i].score;
    }
    return take;
  }

  void record_generation_best(const std::vector<Individual>& pop,
                              bool push_row = true) {
    double best = kInf;
    bool any = false;
    const Individual* best_ind = nullptr;
    for (const auto& ind : pop) {
      if (constrained && !ind.eval.feasible()) continue;
      const double s = score_of(ind.eval);
      if (!any || s < best) {
        best = s;
        any = true;
        best_ind = &ind;
      }
    }
    if (push_row) {
      result.best_f.push_back(
          any ? (direction == Direction::Minimize ? best : -best)
              : std::numeric_limits<double>::quiet_NaN());
      result.feasible.push_back(any ? 1 : 0);
    }
    if (any) {
      const double overall = score_of(result.best_eval);
      if (!result.found_feasible || best < overall) {
        result.found_feasible = true;
        result.best_genome = best_ind->x;
        result.best_eval = best_ind->eval;
        result.best_overall_f = best_ind->eval.f;
      }
    }
  }

  void finish(long gen) {
    if (tracker) {
      tracker->finalize_remaining(gen);
      drain_etv();
      if (tracker->recording_genealogy())
        result.genealogy =
            std::make_shared<Genealogy>(tracker->genealogy());
    }
  }
};

// Assign stochastic-rank positions as scores over an arbitrary set of
// individuals (pool); position 0 = best.
void assign_rank_scores(RunContext& ctx, std::vector<Individual*>& pool) {
  std::vector<double> f(pool.size()), phi(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    f[i] = ctx.score_of(pool[i]->eval);
    phi[i] = pool[i]->eval.phi;
  }
  const int sweeps = ctx.cfg.sr_sweeps > 0 ? ctx.cfg.sr_sweeps
                                           : static_cast<int>(pool.size());
  const auto order = stochastic_rank(f, phi, ctx.cfg.pf, sweeps, ctx.rng_sr);
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    pool[order[pos]]->score = static_cast<double>(pos);
}

// Draw `count` distinct parent indices uniformly (with replacement only if
// the pool is too small), sorted best-first by score.
std::vector<std::size_t> draw_parents(RunContext& ctx,
                                      const std::vector<Individual>& pop,
                                      int count) {
  std::vector<std::size_t> picks;
  picks.reserve(count);
  const std::size_t n = pop.size();
  if (static_cast<std::size_t>(count) > n) {
    for (int i = 0; i < count; ++i) picks.push_back(ctx.rng_parent.uniform_index(n));
  } else {
    while (static_cast<int>(picks.size()) < count) {
      const std::size_t i = ctx.rng_parent.uniform_index(n);
      if (std::find(picks.begin(), picks.end(), i) == picks.end())
        picks.push_back(i);
    }
  }
  std::stable_sort(picks.begin(), picks.end(), [&](std::size_t a, std::size_t b) {
    return pop[a].score < pop[b].score;
  });
  return picks;
}

// Survival selection: reduce `pool` to `mu` members under the configured
// scheme; scores are the active ordering (lower better).
std::vector<std::size_t> select_survivors(RunContext& ctx,
                                          std::span<const double> scores,
                                          int mu) {
  const auto& cfg = ctx.cfg;
  const int pool = static_cast<int>(scores.size());
  const int removals = pool - mu;
  switch (cfg.selection) {
    case SelectionScheme::Tournament:
    case SelectionScheme::ModifiedTournament:
      return modified_tournament_step(scores, removals, ctx.rng_survival);
    case SelectionScheme::Truncation: {
      auto order = truncation_select(scores, static_cast<double>(mu) / pool);
      // floor(T*N) may round below mu; top up from the sort order
      if (static_cast<int>(order.size()) < mu) {
        std::vector<std::size_t> all(pool);
        std::iota(all.begin(), all.end(), 0);
        std::stable_sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
          return scores[a] < scores[b];
        });
        order.assign(all.begin(), all.begin() + mu);
      }
      return order;
    }
    case SelectionScheme::Random: {
      std::vector<std::size_t> alive(pool);
      std::iota(alive.begin(), alive.end(), 0);
      for (int r = 0; r < removals; ++r) {
        const std::size_t kill = ctx.rng_survival.uniform_index(alive.size());
        alive[kill] = alive.back();
        alive.pop_back();
      }
      std::sort(alive.begin(), alive.end());
      return alive;
    }
    case SelectionScheme::LinearRank:
    case SelectionScheme::ExponentialRank:
    case SelectionScheme::Proportional: {
      // repeated single draws without replacement
      std::vector<std::size_t> remaining(pool);
      std::iota(remaining.begin(), remaining.end(), 0);
      std::vector<std::size_t> chosen;
      while (static_cast<int>(chosen.size()) < mu) {
        std::vector<double> sub(remaining.size());
        for (std::size_t i = 0; i < remaining.size(); ++i)
          sub[i] = scores[remaining[i]];
        std::size_t pick;
        if (cfg.selection == SelectionScheme::LinearRank)
          pick = linear_rank_select(sub, 1.0, 0.0, ctx.rng_survival);
        else if (cfg.selection == SelectionScheme::ExponentialRank)
          pick = exponential_rank_select(sub, cfg.exp_c, ctx.rng_survival);
        else {
          // proportional needs positive maximization weights; rank-shift
          std::vector<double> w(sub.size());
          double worst = -kInf;
          for (double s : sub) worst = std::max(worst, s);
          for (std::size_t i = 0; i < sub.size(); ++i)
            w[i] = worst - sub[i] + 1.0;
          pick = proportional_select(w, ctx.rng_survival);
        }
        chosen.push_back(remaining[pick]);
        remaining[pick] = remaining.back();
        remaining.pop_back();
      }
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  throw std::logic_error("select_survivors: unreachable");
}

// ---------------------------------------------------------------------------
// panmictic family
// ---------------------------------------------------------------------------

void run_panmictic(RunContext& ctx) {
  const auto& cfg = ctx.cfg;
  const int n = cfg.population;
  const int mu = cfg.update == UpdateKind::Generational ? std::max(1, n / 2) : n;
  const int lambda = n;
  const double kappa =
      cfg.update == UpdateKind::Generational ? 1.0 : kInf;
  const bool elitist = cfg.update == UpdateKind::Generational && cfg.elitist;

  std::vector<Individual> pop;
  pop.reserve(mu + lambda);
  for (int i = 0; i < mu; ++i) {
    Individual ind = ctx.make_individual(random_genome(ctx.specs, ctx.rng_init), 1);
    ctx.etv_founder(ind, 0);
    pop.push_back(std::move(ind));
  }
  if (ctx.constrained) {
    std::vector<Individual*> ptrs;
    for (auto& ind : pop) ptrs.push_back(&ind);
    assign_rank_scores(ctx, ptrs);
  }
  ctx.record_generation_best(pop, /*push_row=*/false);
  if (cfg.generations == 0) {
    ctx.finish(0);
    return;
  }

  const bool fitness_adapt =
      ctx.controller && !RunContext::etv_driven(cfg.adapt);
  std::vector<double> parent_f;  // maximization orientation
  struct PendingInterp { int op; std::size_t offspring; std::size_t best_parent; };
  std::vector<PendingInterp> pending;

  for (long gen = 1; gen <= cfg.generations; ++gen) {
    // parent-context statistics (maximization orientation: -score)
    FitnessContext fctx;
    if (fitness_adapt && !ctx.constrained) {
      parent_f.resize(pop.size());
      for (std::size_t i = 0; i < pop.size(); ++i) parent_f[i] = -pop[i].score;
      std::vector<double> sorted = parent_f;
      std::sort(sorted.begin(), sorted.end());
      fctx.f_best = sorted.back();
      fctx.f_median = sorted.size() % 2 == 1
                          ? sorted[sorted.size() / 2]
                          : 0.5 * (sorted[sorted.size() / 2 - 1] +
                                   sorted[sorted.size() / 2]);
      fctx.f_90th = sorted[static_cast<std::size_t>(
          std::min<double>(sorted.size() - 1.0,
                           std::floor(0.9 * sorted.size())))];
      fctx.population_f = parent_f;
    }

    // reproduction
    std::vector<Individual> offspring;
    offspring.reserve(lambda);
    pending.clear();
    for (int i = 0; i < lambda; ++i) {
      const std::size_t op_idx = ctx.rng_op.categorical(ctx.op_p);
      const int arity = operator_arity(ctx.ops[op_idx].id);
      const auto picks = draw_parents(ctx, pop, arity);
      std::vector<const Genome*> pg;
      std::vector<const Individual*> pi;
      for (auto p : picks) {
        pg.push_back(&pop[p].x);
        pi.push_back(&pop[p]);
      }
      Individual child = ctx.make_individual(
          apply_operator(ctx.ops[op_idx], pg, ctx.specs, ctx.rng_op), 0);
      ctx.etv_birth(child, static_cast<int>(op_idx), pi, gen);
      if (fitness_adapt) {
        if (ctx.constrained) {
          pending.push_back({static_cast<int>(op_idx), offspring.size(), picks[0]});
        } else {
          fctx.f_parent = -pop[picks[0]].score;
          ctx.controller->record_interpretation(
              static_cast<int>(op_idx),
              interpret(ctx.controller->config().interpretation, -child.score,
                        fctx));
        }
      }
      offspring.push_back(std::move(child));
    }

    // survivors pool: offspring plus parents young enough (elite always)
    std::size_t elite = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
      if (pop[i].score < pop[elite].score) elite = i;
    std::vector<Individual> pool;
    pool.reserve(pop.size() + offspring.size());
    for (auto& child : offspring) pool.push_back(std::move(child));
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (pop[i].age < kappa || (elitist && i == elite))
        pool.push_back(std::move(pop[i]));
    }

    // active ordering over the pool
    if (ctx.constrained) {
      std::vector<Individual*> ptrs;
      for (auto& ind : pool) ptrs.push_back(&ind);
      assign_rank_scores(ctx, ptrs);
      if (fitness_adapt) {
        // ranked-fitness interpretation: contexts over the parent part of
        // the pool (entries lambda..end), measurement -rank position
        std::vector<double> pf;
        for (std::size_t i = lambda; i < pool.size(); ++i)
          pf.push_back(-pool[i].score);
        std::vector<double> sorted = pf;
        std::sort(sorted.begin(), sorted.end());
        FitnessContext rctx;
        if (!sorted.empty()) {
          rctx.f_best = sorted.back();
          rctx.f_median = sorted.size() % 2 == 1
                              ? sorted[sorted.size() / 2]
                              : 0.5 * (sorted[sorted.size() / 2 - 1] +
                                       sorted[sorted.size() / 2]);
          rctx.f_90th = sorted[static_cast<std::size_t>(
              std::min<double>(sorted.size() - 1.0,
                               std::floor(0.9 * sorted.size())))];
          rctx.population_f = pf;
        }
        // steady state keeps every parent in the pool at offset lambda;
        // generational discards them, where the pool best stands in
        const bool parents_in_pool = cfg.update != UpdateKind::Generational;
        for (const auto& p : pending) {
          rctx.f_parent = parents_in_pool
                              ? -pool[lambda + p.best_parent].score
                              : rctx.f_best;
          ctx.controller->record_interpretation(
              p.op, interpret(ctx.controller->config().interpretation,
                              -pool[p.offspring].score, rctx));
        }
      }
    }

    std::vector<double> scores(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) scores[i] = pool[i].score;
    const auto survivors = select_survivors(ctx, scores, mu);

    std::vector<Individual> next;
    next.reserve(mu);
    for (auto idx : survivors) next.push_back(std::move(pool[idx]));
    for (auto& ind : next) ++ind.age;
    pop = std::move(next);

    ctx.etv_pass(pop, gen);
    ctx.maybe_cycle_update(gen);
    ctx.record_generation_best(pop);
    if (cfg.progress) cfg.progress(gen);
  }
  ctx.finish(cfg.generations);
}

// ---------------------------------------------------------------------------
// cellular family (static ring, radius R)
// ---------------------------------------------------------------------------

void run_cga(RunContext& ctx) {
  const auto& cfg = ctx.cfg;
  const int n = cfg.population;
  const int radius = cfg.radius;

  std::vector<Individual> pop;
  pop.reserve(n);
  for (int i = 0; i < n; ++i) {
    Individual ind = ctx.make_individual(random_genome(ctx.specs, ctx.rng_init), 1);
    ctx.etv_founder(ind, 0);
    pop.push_back(std::move(ind));
  }
  if (ctx.constrained) {
    std::vector<Individual*> ptrs;
    for (auto& ind : pop) ptrs.push_back(&ind);
    assign_rank_scores(ctx, ptrs);
  }
  ctx.record_generation_best(pop, /*push_row=*/false);

  std::vector<int> neighborhood;
  neighborhood.reserve(2 * radius);

  for (long gen = 1; gen <= cfg.generations; ++gen) {
    std::vector<Individual> children;
    children.reserve(n);
    for (int i = 0; i < n; ++i) {
      neighborhood.clear();
      for (int d = 1; d <= radius; ++d) {
        neighborhood.push_back((i + d) % n);
        neighborhood.push_back((i - d + n) % n);
      }
      const std::size_t op_idx = ctx.rng_op.categorical(ctx.op_p);
      const int arity = operator_arity(ctx.ops[op_idx].id);

      std::vector<std::size_t> picks{static_cast<std::size_t>(i)};
      std::vector<double> nb_scores(neighborhood.size());
      for (std::size_t k = 0; k < neighborhood.size(); ++k)
        nb_scores[k] = pop[neighborhood[k]].score;
      while (static_cast<int>(picks.size()) < arity) {
        // linear-ranking draw inside the radius; duplicates allowed only
        // when the neighborhood is too small to avoid them
        std::size_t chosen = neighborhood[linear_rank_select(
            nb_scores, 1.0, 0.0, ctx.rng_parent)];
        bool dup = std::find(picks.begin(), picks.end(), chosen) != picks.end();
        if (dup && neighborhood.size() + 1 > picks.size()) {
          int tries = 0;
          while (dup && tries++ < 32) {
            chosen = neighborhood[linear_rank_select(nb_scores, 1.0, 0.0,
                                                     ctx.rng_parent)];
            dup = std::find(picks.begin(), picks.end(), chosen) != picks.end();
          }
        }
        picks.push_back(chosen);
      }
      std::stable_sort(picks.begin(), picks.end(),
                       [&](std::size_t a, std::size_t b) {
                         return pop[a].score < pop[b].score;
                       });
      std::vector<const Genome*> pg;
      std::vector<const Individual*> pi;
      for (auto p : picks) {
        pg.push_back(&pop[p].x);
        pi.push_back(&pop[p]);
      }
      Individual child = ctx.make_individual(
          apply_operator(ctx.ops[op_idx], pg, ctx.specs, ctx.rng_op), 0);
      ctx.etv_birth(child, static_cast<int>(op_idx), pi, gen);
      children.push_back(std::move(child));
    }
    // synchronous replacement under one per-generation ordering
    const auto take = ctx.replace_decisions(pop, children);
    for (int i = 0; i < n; ++i) {
      if (take[i]) pop[i] = std::move(children[i]);
      ++pop[i].age;
    }

    ctx.etv_pass(pop, gen);
    ctx.record_generation_best(pop);
    if (cfg.progress) cfg.progress(gen);
  }
  ctx.finish(cfg.generations);
}

// ---------------------------------------------------------------------------
// SOTEA model I (asexual growth/competition dynamics on binary problems)
// ---------------------------------------------------------------------------

void run_sotea1(RunContext& ctx) {
  const auto& cfg = ctx.cfg;
  const int n = cfg.population;
  for (const auto& s : ctx.specs)
    if (s.kind != GeneKind::Binary)
      throw std::invalid_argument("sotea1 requires an all-binary problem");
  const double flip_rate = cfg.bitflip_rate > 0.0
                               ? cfg.bitflip_rate
                               : 2.0 / static_cast<double>(ctx.specs.size());
  const bool epistatic = cfg.sotea1_fitness == "epistatic";
  enum class Net { Sotea, Ring, Panmictic };
  const Net net = cfg.sotea1_net == "sotea"
                      ? Net::Sotea
                      : cfg.sotea1_net == "ring" ? Net::Ring : Net::Panmictic;
  const Sotea1Params params{cfg.p_add, cfg.p_remove};

  std::vector<Individual> pop;
  pop.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    Individual ind = ctx.make_individual(random_genome(ctx.specs, ctx.rng_init), 1);
    ctx.etv_founder(ind, 0);
    pop.push_back(std::move(ind));
  }
  Graph graph = net == Net::Panmictic ? Graph(n) : Graph::ring(n);
  ctx.record_generation_best(pop, /*push_row=*/false);

  auto mutate = [&](const Genome& g) {
    Genome h = g;
    for (auto& bit : h)
      if (ctx.rng_op.bernoulli(flip_rate)) bit = bit != 0.0 ? 0.0 : 1.0;
    return h;
  };

  // competition fitness: lower-is-better keys
  auto compete_keys = [&]() {
    std::vector<double> keys(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) keys[i] = pop[i].score;
    if (epistatic && net != Net::Panmictic) {
      std::vector<double> epi(pop.size());
      for (std::size_t i = 0; i < pop.size(); ++i)
        epi[i] = -epistatic_fitness(graph, keys, static_cast<int>(i));
      return epi;
    }
    return keys;
  };

  for (long gen = 1; gen <= cfg.generations; ++gen) {
    // N reproductions, parents sampled (with replacement) from the N-member
    // parent population only; offspring enter the pool for competition
    for (int r = 0; r < n; ++r) {
      const std::size_t parent = ctx.rng_parent.uniform_index(n);
      Individual child = ctx.make_individual(mutate(pop[parent].x), 0);
      const Individual* pi[] = {&pop[parent]};
      ctx.etv_birth(child, 0, pi, gen);
      pop.push_back(std::move(child));
      if (net == Net::Sotea)
        sotea1_reproduce(graph, static_cast<int>(parent), params, ctx.rng_topology);
      else if (net == Net::Ring)
        ring_reproduce(graph, static_cast<int>(parent), ctx.rng_topology);
    }
    // N competitions
    for (int r = 0; r < n; ++r) {
      const int selected = static_cast<int>(ctx.rng_parent.uniform_index(pop.size()));
      int winner, loser;
      if (net == Net::Panmictic) {
        int other = static_cast<int>(ctx.rng_parent.uniform_index(pop.size() - 1));
        if (other >= selected) ++other;
        if (pop[other].score < pop[selected].score) {
          winner = other;
          loser = selected;
        } else {  // ties keep the selected individual
          winner = selected;
          loser = other;
        }
        (void)winner;
        pop[loser] = std::move(pop.back());
        pop.pop_back();
      } else {
        const auto keys = compete_keys();
        auto [win, lose] = sotea1_compete(graph, selected, keys);
        winner = win;
        loser = lose;
        const int moved = absorb_and_remove(graph, winner, loser);
        pop[loser] = std::move(pop.back());
        pop.pop_back();
        (void)moved;  // graph uses the same swap-with-last layout as pop
      }
    }

    for (auto& ind : pop) ++ind.age;
    ctx.etv_pass(pop, gen);
    ctx.record_generation_best(pop);

    if (cfg.telemetry_diversity && gen % cfg.diversity_every == 0) {
      std::vector<Genome> genomes;
      genomes.reserve(pop.size());
      for (const auto& ind : pop) genomes.push_back(ind.x);
      std::vector<std::size_t> all(pop.size());
      std::iota(all.begin(), all.end(), 0);
      std::vector<std::size_t> by_score = all;
      std::sort(by_score.begin(), by_score.end(), [&](std::size_t a, std::size_t b) {
        return pop[a].score < pop[b].score;
      });
      const std::size_t top = std::max<std::size_t>(2, pop.size() / 5);
      std::vector<std::size_t> top20(by_score.begin(), by_score.begin() + top);
      ctx.result.diversity.push_back(
          {gen, diversity(genomes, ctx.specs, all),
           diversity(genomes, ctx.specs, top20)});
    }
    if (cfg.telemetry_topology && net != Net::Panmictic &&
        gen % cfg.topology_every == 0) {
      const auto m = topology_metrics(graph);
      ctx.result.topology.push_back(
          {gen, m.path_length, m.k_ave, m.c_ave, m.ck_slope, m.knn_slope});
    }
    if (cfg.progress) cfg.progress(gen);
  }
  ctx.finish(cfg.generations);
}

// ---------------------------------------------------------------------------
// SOTEA model II (rewiring rules + random-walk mating on a fixed node set)
// ---------------------------------------------------------------------------

void run_sotea2(RunContext& ctx) {
  const auto& cfg = ctx.cfg;
  const int n = cfg.population;
  const Sotea2Params& params = cfg.sotea2;

  std::vector<Individual> pop;
  pop.reserve(n);
  for (int i = 0; i < n; ++i) {
    Individual ind = ctx.make_individual(random_genome(ctx.specs, ctx.rng_init), 1);
    ctx.etv_founder(ind, 0);
    pop.push_back(std::move(ind));
  }
  Graph graph = Graph::ring(n);
  if (ctx.constrained) {
    std::vector<Individual*> ptrs;
    for (auto& ind : pop) ptrs.push_back(&ind);
    assign_rank_scores(ctx, ptrs);
  }
  ctx.record_generation_best(pop, /*push_row=*/false);

  for (long gen = 1; gen <= cfg.generations; ++gen) {
    // global ranks (1 = best) under the active ordering, fixed for the
    // generation: they drive the degree set points and the edge weights
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pop[a].score < pop[b].score;
    });
    std::vector<int> ranks(n);
    std::vector<double> kset(n);
    for (int pos = 0; pos < n; ++pos) ranks[order[pos]] = pos + 1;
    for (int i = 0; i < n; ++i) kset[i] = sotea2_kset(ranks[i], n, params);

    std::vector<Individual> children;
    children.reserve(n);
    for (int n1 = 0; n1 < n; ++n1) {
      sotea2_rewire(graph, n1, ranks, kset, params, ctx.rng_topology);

      const std::size_t op_idx = ctx.rng_op.categorical(ctx.op_p);
      const int arity = operator_arity(ctx.ops[op_idx].id);
      std::vector<std::size_t> picks{static_cast<std::size_t>(n1)};
      while (static_cast<int>(picks.size()) < arity) {
        int mate = -1;
        for (int t = 0; t < params.walk_retries && mate < 0; ++t) {
          auto walk = two_step_walk(graph, n1, ctx.rng_parent);
          if (walk) mate = walk->second;
        }
        if (mate < 0) {
          const auto& nb = graph.neighbors(n1);
          mate = nb[ctx.rng_parent.uniform_index(nb.size())];
        }
        picks.push_back(static_cast<std::size_t>(mate));
      }
      std::stable_sort(picks.begin(), picks.end(),
                       [&](std::size_t a, std::size_t b) {
                         return pop[a].score < pop[b].score;
                       });
      std::vector<const Genome*> pg;
      std::vector<const Individual*> pi;
      for (auto p : picks) {
        pg.push_back(&pop[p].x);
        pi.push_back(&pop[p]);
      }
      Individual child = ctx.make_individual(
          apply_operator(ctx.ops[op_idx], pg, ctx.specs, ctx.rng_op), 0);
      ctx.etv_birth(child, static_cast<int>(op_idx), pi, gen);
      children.push_back(std::move(child));
    }
    const auto take = ctx.replace_decisions(pop, children);
    for (int i = 0; i < n; ++i) {
      if (take[i]) pop[i] = std::move(children[i]);
      ++pop[i].age;
    }

    ctx.etv_pass(pop, gen);
    ctx.record_generation_best(pop);

    if (cfg.telemetry_topology && gen % cfg.topology_every == 0) {
      const auto m = topology_metrics(graph);
      ctx.result.topology.push_back(
          {gen, m.path_length, m.k_ave, m.c_ave, m.ck_slope, m.knn_slope});
    }
    if (cfg.edges_every > 0 && gen % cfg.edges_every == 0) {
      EdgeSnapshot snap;
      snap.gen = gen;
      for (int u = 0; u < graph.size(); ++u)
        for (int v : graph.neighbors(u))
          if (u < v) snap.edges.emplace_back(u, v);
      std::sort(snap.edges.begin(), snap.edges.end());
      ctx.result.edges.push_back(std::move(snap));
    }
    if (cfg.progress) cfg.progress(gen);
  }
  ctx.finish(cfg.generations);
}

}  // namespace

RunResult run(const RunConfig& config) {
  config.validate();
  RunContext ctx(config);
  switch (config.family) {
    case AlgorithmFamily::Panmictic: run_panmictic(ctx); break;
    case AlgorithmFamily::Cga: run_cga(ctx); break;
    case AlgorithmFamily::Sotea1: run_sotea1(ctx); break;
    case AlgorithmFamily::Sotea2: run_sotea2(ctx); break;
  }
  return std::move(ctx.result);
}

std::vector<RunResult> run_batch(std::span<const RunConfig> configs,
                                 std::span<const std::uint64_t> seeds,
                                 int jobs) {
  const std::size_t total = configs.size() * seeds.size();
  std::vector<RunResult> results(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      RunConfig cfg = configs[idx / seeds.size()];
      cfg.seed = seeds[idx % seeds.size()];
      results[idx] = run(cfg);
    }
  };
  const int workers = std::max(1, jobs);
  if (workers == 1 || total <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return results;
}

}  // namespace evodyn
