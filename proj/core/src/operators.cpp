#include "evodyn/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace evodyn {

int operator_arity(OperatorId id) {
  switch (id) {
    case OperatorId::PointMutation:
    case OperatorId::Creep:
    case OperatorId::Raise:
      return 1;
    case OperatorId::DifferentialEvolution:
      return 4;
    default:
      return 2;
  }
}

const char* operator_name(OperatorId id) {
  switch (id) {
    case OperatorId::WrightHeuristic: return "wright";
    case OperatorId::SimpleCrossover: return "simple";
    case OperatorId::ExtendedLine: return "extended_line";
    case OperatorId::UniformCrossover: return "uniform";
    case OperatorId::BlxAlpha: return "blx";
    case OperatorId::DifferentialEvolution: return "de";
    case OperatorId::Swap: return "swap";
    case OperatorId::Raise: return "raise";
    case OperatorId::Creep: return "creep";
    case OperatorId::PointMutation: return "mutation";
  }
  return "?";
}

OperatorId operator_from_name(const std::string& name) {
  static const std::pair<const char*, OperatorId> table[] = {
      {"wright", OperatorId::WrightHeuristic},
      {"simple", OperatorId::SimpleCrossover},
      {"extended_line", OperatorId::ExtendedLine},
      {"uniform", OperatorId::UniformCrossover},
      {"blx", OperatorId::BlxAlpha},
      {"de", OperatorId::DifferentialEvolution},
      {"swap", OperatorId::Swap},
      {"raise", OperatorId::Raise},
      {"creep", OperatorId::Creep},
      {"mutation", OperatorId::PointMutation},
  };
  for (auto& [n, id] : table)
    if (name == n) return id;
  throw std::invalid_argument("unknown operator: " + name);
}

OperatorSpec default_operator(OperatorId id) {
  OperatorSpec spec;
  spec.id = id;
  return spec;
}

namespace {

Genome wright_heuristic(const OperatorSpec& op, const Genome& g1, const Genome& g2) {
  Genome h(g1.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] = op.wright_r * (g1[i] - g2[i]) + g1[i];
  return h;
}

Genome extended_line(const OperatorSpec& op, const Genome& g1, const Genome& g2) {
  Genome h(g1.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] = op.extended_r * (g2[i] - g1[i]) + g1[i];
  return h;
}

Genome simple_crossover(const Genome& g1, const Genome& g2, Rng& rng) {
  const int n = static_cast<int>(g1.size());
  const int cut = rng.uniform_int(0, n);  // prefix of g1, suffix of g2
  Genome h(g1.size());
  for (int i = 0; i < n; ++i) h[i] = i < cut ? g1[i] : g2[i];
  return h;
}

Genome uniform_crossover(const Genome& g1, const Genome& g2, Rng& rng) {
  Genome h(g1.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] = rng.uniform() > 0.5 ? g1[i] : g2[i];
  return h;
}

Genome blx_alpha(const OperatorSpec& op, const Genome& g1, const Genome& g2,
                 Rng& rng) {
  Genome h(g1.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double lo = std::min(g1[i], g2[i]);
    const double hi = std::max(g1[i], g2[i]);
    const double spread = (hi - lo) * op.blx_alpha;
    h[i] = rng.uniform(lo - spread, hi + spread);
  }
  return h;
}

Genome differential(const OperatorSpec& op, const Genome& g1, const Genome& g2,
                    const Genome& g3, const Genome& g4, Rng& rng) {
  Genome h(g1.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (op.de_beta > rng.uniform())
      h[i] = g2[i] + op.de_alpha * (g3[i] - g4[i]);
    else
      h[i] = g1[i];
  }
  return h;
}

Genome swap_genes(const OperatorSpec& op, const Genome& g1, const Genome& g2) {
  const std::size_t n = g1.size();
  Genome h = g1;
  if (op.swap_literal_rank_rule) {
    // Written predicate: rank 1 = greatest |difference|; positions with
    // rank <= alpha take the gene from parent 2.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return std::fabs(g1[a] - g2[a]) > std::fabs(g1[b] - g2[b]);
    });
    for (int r = 0; r < op.swap_alpha && r < static_cast<int>(n); ++r)
      h[idx[r]] = g2[idx[r]];
  } else {
    // Prose behaviour: exactly the most similar differing gene moves.
    std::size_t pick = n;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = std::fabs(g1[i] - g2[i]);
      if (d == 0.0) continue;
      if (pick == n || d < best) {
        pick = i;
        best = d;
      }
    }
    if (pick < n) h[pick] = g2[pick];
  }
  return h;
}

Genome raise(const OperatorSpec& op, const Genome& g1,
             std::span<const GeneSpec> spec, Rng& rng) {
  Genome h(g1.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    h[i] = g1[i] + rng.normal(0.0, op.raise_a * spec[i].range());
  return h;
}

Genome creep(const OperatorSpec& op, const Genome& g1,
             std::span<const GeneSpec> spec, Rng& rng) {
  Genome h = g1;
  const std::size_t k = rng.uniform_index(h.size());
  h[k] += rng.normal(0.0, op.creep_a * spec[k].range());
  return h;
}

Genome point_mutation(const Genome& g1, std::span<const GeneSpec> spec, Rng& rng) {
  Genome h = g1;
  const std::size_t k = rng.uniform_index(h.size());
  h[k] = rng.uniform(spec[k].lower, spec[k].upper);
  return h;
}

}  // namespace

Genome apply_operator(const OperatorSpec& op,
                      std::span<const Genome* const> parents,
                      std::span<const GeneSpec> spec, Rng& rng) {
  if (parents.empty()) throw std::invalid_argument("apply_operator: no parents");
  if (static_cast<int>(parents.size()) != operator_arity(op.id))
    throw std::invalid_argument("apply_operator: wrong arity");
  const Genome& g1 = *parents[0];
  Genome h;
  switch (op.id) {
    case OperatorId::WrightHeuristic: h = wright_heuristic(op, g1, *parents[1]); break;
    case OperatorId::SimpleCrossover: h = simple_crossover(g1, *parents[1], rng); break;
    case OperatorId::ExtendedLine: h = extended_line(op, g1, *parents[1]); break;
    case OperatorId::UniformCrossover: h = uniform_crossover(g1, *parents[1], rng); break;
    case OperatorId::BlxAlpha: h = blx_alpha(op, g1, *parents[1], rng); break;
    case OperatorId::DifferentialEvolution:
      h = differential(op, g1, *parents[1], *parents[2], *parents[3], rng);
      break;
    case OperatorId::Swap: h = swap_genes(op, g1, *parents[1]); break;
    case OperatorId::Raise: h = raise(op, g1, spec, rng); break;
    case OperatorId::Creep: h = creep(op, g1, spec, rng); break;
    case OperatorId::PointMutation: h = point_mutation(g1, spec, rng); break;
  }
  return clamp_to_bounds(std::move(h), spec);
}

std::vector<OperatorSpec> operator_set(const std::string& name) {
  auto make = [](std::initializer_list<OperatorId> ids) {
    std::vector<OperatorSpec> ops;
    for (OperatorId id : ids) ops.push_back(default_operator(id));
    return ops;
  };
  if (name == "ops10")
    return make({OperatorId::WrightHeuristic, OperatorId::SimpleCrossover,
                 OperatorId::ExtendedLine, OperatorId::UniformCrossover,
                 OperatorId::BlxAlpha, OperatorId::DifferentialEvolution,
                 OperatorId::Swap, OperatorId::Raise, OperatorId::Creep,
                 OperatorId::PointMutation});
  if (name == "ops7")
    return make({OperatorId::WrightHeuristic, OperatorId::SimpleCrossover,
                 OperatorId::ExtendedLine, OperatorId::UniformCrossover,
                 OperatorId::BlxAlpha, OperatorId::DifferentialEvolution,
                 OperatorId::PointMutation});
  if (name == "ops2")
    return make({OperatorId::UniformCrossover, OperatorId::PointMutation});
  throw std::invalid_argument("unknown operator set: " + name);
}

std::vector<double> static_probabilities(const std::vector<OperatorSpec>& ops,
                                         const std::string& set_name) {
  std::vector<double> p(ops.size(), 1.0 / static_cast<double>(ops.size()));
  if (set_name == "ops2") {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].id == OperatorId::UniformCrossover) p[i] = 0.98;
      else if (ops[i].id == OperatorId::PointMutation) p[i] = 0.02;
    }
  }
  return p;
}

}  // namespace evodyn
