#include "evodyn/etv.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace evodyn {

std::size_t dominant_parent(const Genome& offspring,
                            std::span<const Genome* const> parents,
                            std::span<const GeneSpec> spec) {
  if (parents.empty()) throw std::invalid_argument("dominant_parent: no parents");
  std::size_t best = 0;
  double best_d = normalized_euclidean_distance(offspring, *parents[0], spec);
  for (std::size_t i = 1; i < parents.size(); ++i) {
    const double d = normalized_euclidean_distance(offspring, *parents[i], spec);
    if (d < best_d) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

EtvTracker::EtvTracker(EtvConfig cfg, bool record_genealogy)
    : cfg_(cfg), record_genealogy_(record_genealogy) {
  if (cfg_.t_obs < 1) throw std::invalid_argument("EtvTracker: t_obs < 1");
  if (cfg_.p_new < 0.0 || cfg_.p_new > 1.0)
    throw std::invalid_argument("EtvTracker: bad p_new");
}

std::uint64_t EtvTracker::record_birth(
    int op, long gen, const std::vector<std::uint64_t>& parent_history,
    std::uint64_t parent_event, Rng& rng,
    std::vector<std::uint64_t>& out_history) {
  const std::uint64_t id = next_id_++;
  const bool uncoupled =
      parent_event == 0 || (cfg_.p_new > 0.0 && rng.bernoulli(cfg_.p_new));
  out_history.clear();
  if (!uncoupled) {
    // newest t_obs - 1 entries of the dominant parent's record
    const std::size_t keep =
        std::min(parent_history.size(), static_cast<std::size_t>(cfg_.t_obs - 1));
    out_history.assign(parent_history.end() - static_cast<std::ptrdiff_t>(keep),
                       parent_history.end());
  }
  out_history.push_back(id);
  active_.emplace(id, ActiveEntry{op, gen, 1, 1});
  if (record_genealogy_) {
    genealogy_.nodes.push_back(
        {id, op, gen, uncoupled ? 0 : parent_event});
  }
  return id;
}

void EtvTracker::generation_pass(
    std::span<const std::vector<std::uint64_t>* const> population_histories,
    long gen) {
  counts_.clear();
  for (const auto* hist : population_histories) {
    for (std::size_t j = 0; j < hist->size(); ++j) {
      ++counts_[(*hist)[j]];
      // depth from the newest end; 1 = the individual's own event
      auto it = active_.find((*hist)[j]);
      if (it != active_.end()) {
        const int depth = static_cast<int>(hist->size() - j);
        if (depth > it->second.max_depth) it->second.max_depth = depth;
      }
    }
  }

  // Hitchhiker test: scan adjacent (ancestor, descendant) pairs per list
  // against the raw counts; zero the ancestor when the counts match. One
  // sweep per generation, no cascading within the sweep.
  std::vector<std::uint64_t> zeroed;
  for (const auto* hist : population_histories) {
    for (std::size_t j = 0; j + 1 < hist->size(); ++j) {
      const std::uint64_t ancestor = (*hist)[j];
      const std::uint64_t descendant = (*hist)[j + 1];
      auto ia = counts_.find(ancestor);
      auto id_ = counts_.find(descendant);
      if (ia != counts_.end() && id_ != counts_.end() && ia->second > 0 &&
          ia->second == id_->second) {
        zeroed.push_back(ancestor);
      }
    }
  }
  for (std::uint64_t id : zeroed) counts_[id] = 0;

  // Peak update then finalize zero-count events (hitchhikers and lineages
  // that vanished from every record).
  for (auto it = active_.begin(); it != active_.end();) {
    const auto c = counts_.find(it->first);
    const int count = c == counts_.end() ? 0 : c->second;
    if (count > it->second.peak) it->second.peak = count;
    if (count == 0) {
      EtvRecord rec;
      rec.event = it->first;
      rec.op = it->second.op;
      rec.size = it->second.peak;
      rec.age = static_cast<int>(std::max(1L, gen - it->second.birth_gen));
      rec.birth_gen = it->second.birth_gen;
      rec.censored = false;
      rec.max_depth = it->second.max_depth;
      finalized_.push_back(rec);
      it = active_.erase(it);
    } else {
      ++it;
    }
  }

  if (record_genealogy_) {
    if (static_cast<long>(genealogy_.alive.size()) <= gen)
      genealogy_.alive.resize(gen + 1);
    auto& alive = genealogy_.alive[gen];
    alive.clear();
    for (const auto* hist : population_histories) {
      assert(!hist->empty());
      alive.push_back(hist->back());
    }
  }
}

void EtvTracker::finalize_remaining(long gen) {
  for (auto& [id, entry] : active_) {
    EtvRecord rec;
    rec.event = id;
    rec.op = entry.op;
    rec.size = entry.peak;
    rec.age = static_cast<int>(std::max(1L, gen - entry.birth_gen));
    rec.birth_gen = entry.birth_gen;
    rec.censored = true;
    rec.max_depth = entry.max_depth;
    finalized_.push_back(rec);
  }
  active_.clear();
}

std::vector<EtvRecord> EtvTracker::take_finalized() {
  std::vector<EtvRecord> out;
  out.swap(finalized_);
  return out;
}

}  // namespace evodyn
