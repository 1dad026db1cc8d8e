#include "evodyn/etv_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace evodyn {

std::vector<EtvRecord> etv_bruteforce_oracle(const Genealogy& genealogy,
                                             const EtvConfig& cfg, long horizon,
                                             std::size_t max_events) {
  if (genealogy.nodes.size() > max_events)
    throw std::invalid_argument("etv_bruteforce_oracle: graph too large");

  // id -> node (ids are issued from 1 in birth order)
  const auto node_of = [&](std::uint64_t id) -> const Genealogy::Node& {
    return genealogy.nodes[id - 1];
  };

  struct State {
    int peak = 1;
    long birth_gen = 0;
    int op = 0;
  };
  std::unordered_map<std::uint64_t, State> active;
  std::vector<EtvRecord> out;
  std::size_t next_birth = 0;  // nodes are sorted by birth generation

  for (long gen = 0; gen <= horizon; ++gen) {
    while (next_birth < genealogy.nodes.size() &&
           genealogy.nodes[next_birth].birth_gen <= gen) {
      const auto& n = genealogy.nodes[next_birth];
      active.emplace(n.id, State{1, n.birth_gen, n.op});
      ++next_birth;
    }
    if (gen >= static_cast<long>(genealogy.alive.size())) continue;
    const auto& alive = genealogy.alive[gen];
    if (alive.empty()) continue;

    // Rebuild each living individual's ancestry chain (newest first) by
    // walking dominant-parent links, capped at t_obs entries.
    std::vector<std::vector<std::uint64_t>> chains;
    chains.reserve(alive.size());
    for (std::uint64_t e : alive) {
      std::vector<std::uint64_t> chain;
      std::uint64_t cur = e;
      while (cur != 0 && static_cast<int>(chain.size()) < cfg.t_obs) {
        chain.push_back(cur);
        cur = node_of(cur).parent;
      }
      chains.push_back(std::move(chain));
    }

    std::unordered_map<std::uint64_t, int> counts;
    for (const auto& chain : chains)
      for (std::uint64_t id : chain) ++counts[id];

    // one zeroing sweep against the raw counts
    std::vector<std::uint64_t> zeroed;
    for (const auto& chain : chains) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const std::uint64_t descendant = chain[i];
        const std::uint64_t ancestor = chain[i + 1];
        const auto ia = counts.find(ancestor);
        const auto id_ = counts.find(descendant);
        if (ia != counts.end() && id_ != counts.end() && ia->second > 0 &&
            ia->second == id_->second)
          zeroed.push_back(ancestor);
      }
    }
    for (std::uint64_t id : zeroed) counts[id] = 0;

    for (auto it = active.begin(); it != active.end();) {
      const auto c = counts.find(it->first);
      const int count = c == counts.end() ? 0 : c->second;
      if (count > it->second.peak) it->second.peak = count;
      if (count == 0) {
        out.push_back({it->first, it->second.op, it->second.peak,
                       static_cast<int>(std::max(1L, gen - it->second.birth_gen)),
                       it->second.birth_gen, false, 0});
        it = active.erase(it);
      } else {
        ++it;
      }
    }
  }

  while (next_birth < genealogy.nodes.size()) {
    const auto& n = genealogy.nodes[next_birth++];
    active.emplace(n.id, State{1, n.birth_gen, n.op});
  }
  for (auto& [id, st] : active) {
    out.push_back({id, st.op, st.peak,
                   static_cast<int>(std::max(1L, horizon - st.birth_gen)),
                   st.birth_gen, true, 0});
  }
  std::sort(out.begin(), out.end(),
            [](const EtvRecord& a, const EtvRecord& b) { return a.event < b.event; });
  return out;
}

}  // namespace evodyn
