#pragma once

#include "evodyn/etv.hpp"

namespace evodyn {

/// Definitional recomputation of every event's takeover record from the
/// retained reproduction graph: per generation the ancestry chain of each
/// living individual is rebuilt by walking dominant-parent links (depth
/// capped at t_obs), counts are taken per event, the hitchhiker rule applied
/// and peaks tracked. Shares no state with EtvTracker; used to pin the
/// incremental implementation exactly. Throws if the graph exceeds
/// `max_events` (the recomputation is quadratic-ish and meant for small runs).
std::vector<EtvRecord> etv_bruteforce_oracle(const Genealogy& genealogy,
                                             const EtvConfig& cfg, long horizon,
                                             std::size_t max_events = 2'000'000);

}  // namespace evodyn
