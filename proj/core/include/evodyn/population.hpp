#pragma once

#include <cstdint>
#include <vector>

#include "evodyn/genome.hpp"
#include "evodyn/objectives.hpp"

namespace evodyn {

/// One population slot: genome, its evaluation, the minimization score used
/// by the active ordering (objective, negated for maximization problems, or
/// the stochastic-rank position on constrained problems), the survival age
/// and the ancestry record used for impact measurement.
struct Individual {
  Genome x;
  Evaluation eval;
  double score = 0.0;
  int age = 0;
  std::uint64_t event_id = 0;
  std::vector<std::uint64_t> history;  // oldest first; last entry is own event
};

}  // namespace evodyn
