#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "evodyn/genome.hpp"
#include "evodyn/rng.hpp"

namespace evodyn {

/// Index of the genetically dominant parent: argmin of the normalized
/// Euclidean distance to the offspring; ties go to the lowest index.
std::size_t dominant_parent(const Genome& offspring,
                            std::span<const Genome* const> parents,
                            std::span<const GeneSpec> spec);

struct EtvConfig {
  int t_obs = 20;       // ancestry list capacity
  double p_new = 0.0;   // probability of historical uncoupling at birth
};

/// One finished impact measurement: the peak per-generation descendant count
/// (size), the generations from birth to completion (age, >= 1) and the
/// operator that created the event. Events still alive at run end are
/// flagged censored.
struct EtvRecord {
  std::uint64_t event = 0;
  int op = 0;
  int size = 1;
  int age = 1;
  long birth_gen = 0;
  bool censored = false;
  int max_depth = 1;  // deepest list position (from the newest end) observed
};

/// Retained reproduction graph for the brute-force cross-check: one node per
/// event with its dominant-parent link (0 = uncoupled) plus, per generation,
/// the events owned by the individuals alive after survival selection.
struct Genealogy {
  struct Node {
    std::uint64_t id = 0;
    int op = 0;
    long birth_gen = 0;
    std::uint64_t parent = 0;
  };
  std::vector<Node> nodes;                      // in id order, ids start at 1
  std::vector<std::vector<std::uint64_t>> alive;  // alive[g] = events at gen g
};

/// Incremental event-takeover bookkeeping. Every offspring creation issues an
/// event id and an inherited ancestry list; once per generation (after
/// survival selection) the population's lists are scanned, per-event counts
/// taken, hitchhikers zeroed, peaks updated and finished events emitted.
class EtvTracker {
 public:
  explicit EtvTracker(EtvConfig cfg, bool record_genealogy = false);

  /// Issue an id for a new offspring and build its ancestry list: with
  /// probability p_new the list is just the new id, otherwise the dominant
  /// parent's list truncated to the newest t_obs-1 entries plus the new id.
  std::uint64_t record_birth(int op, long gen,
                             const std::vector<std::uint64_t>& parent_history,
                             std::uint64_t parent_event, Rng& rng,
                             std::vector<std::uint64_t>& out_history);

  /// Count event occurrences over the population lists, zero hitchhikers
  /// (an ancestor whose count equals its immediate descendant's in some
  /// list), update peaks with the surviving counts, finalize events whose
  /// count reached zero.
  void generation_pass(
      std::span<const std::vector<std::uint64_t>* const> population_histories,
      long gen);

  /// Finalize everything still active (end of run); records are censored.
  void finalize_remaining(long gen);

  /// Drain records finalized since the last call.
  std::vector<EtvRecord> take_finalized();

  std::size_t active_count() const { return active_.size(); }
  std::uint64_t events_issued() const { return next_id_ - 1; }
  const Genealogy& genealogy() const { return genealogy_; }
  bool recording_genealogy() const { return record_genealogy_; }

 private:
  struct ActiveEntry {
    int op = 0;
    long birth_gen = 0;
    int peak = 1;
    int max_depth = 1;
  };

  EtvConfig cfg_;
  bool record_genealogy_ = false;
  std::uint64_t next_id_ = 1;
  std::unordered_map<std::uint64_t, ActiveEntry> active_;
  std::vector<EtvRecord> finalized_;
  Genealogy genealogy_;
  // scratch reused across passes
  std::unordered_map<std::uint64_t, int> counts_;
};

}  // namespace evodyn
