#pragma once

#include <json.hpp>

#include "evodyn/engine.hpp"

namespace evodyn::tools {

inline nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["problem"] = c.problem;
  j["family"] = family_name(c.family);
  j["population"] = c.population;
  j["generations"] = c.generations;
  j["seed"] = c.seed;
  j["update"] = update_name(c.update);
  j["selection"] = selection_name(c.selection);
  j["tour_q"] = c.tour_q;
  j["trunc_t"] = c.trunc_t;
  j["exp_c"] = c.exp_c;
  j["elitist"] = c.elitist;
  j["operator_set"] = c.operator_set;
  j["adapt"] = adaptive_name(c.adapt);
  j["ctrl"] = {{"alpha", c.ctrl_alpha},
               {"beta", c.ctrl_beta},
               {"p_min", c.ctrl_p_min},
               {"tau", c.ctrl_tau}};
  j["pf"] = c.pf;
  j["sr_sweeps"] = c.sr_sweeps;
  j["radius"] = c.radius;
  j["sotea1"] = {{"p_add", c.p_add},
                 {"p_remove", c.p_remove},
                 {"fitness", c.sotea1_fitness},
                 {"net", c.sotea1_net},
                 {"bitflip_rate", c.bitflip_rate}};
  j["sotea2"] = {{"k_min", c.sotea2.k_min},
                 {"k_max", c.sotea2.k_max},
                 {"walk_retries", c.sotea2.walk_retries}};
  j["etv"] = {{"track", c.track_etv}, {"t_obs", c.t_obs}, {"p_new", c.p_new}};
  j["telemetry"] = {{"topology", c.telemetry_topology},
                    {"topology_every", c.topology_every},
                    {"edges_every", c.edges_every},
                    {"diversity", c.telemetry_diversity},
                    {"diversity_every", c.diversity_every}};
  return j;
}

inline RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  if (j.contains("problem")) c.problem = j.at("problem").get<std::string>();
  if (j.contains("family"))
    c.family = family_from_name(j.at("family").get<std::string>());
  if (j.contains("population")) c.population = j.at("population").get<int>();
  if (j.contains("generations")) c.generations = j.at("generations").get<long>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("update"))
    c.update = update_from_name(j.at("update").get<std::string>());
  if (j.contains("selection"))
    c.selection = selection_from_name(j.at("selection").get<std::string>());
  if (j.contains("tour_q")) c.tour_q = j.at("tour_q").get<int>();
  if (j.contains("trunc_t")) c.trunc_t = j.at("trunc_t").get<double>();
  if (j.contains("exp_c")) c.exp_c = j.at("exp_c").get<double>();
  if (j.contains("elitist")) c.elitist = j.at("elitist").get<bool>();
  if (j.contains("operator_set"))
    c.operator_set = j.at("operator_set").get<std::string>();
  if (j.contains("adapt"))
    c.adapt = adaptive_from_name(j.at("adapt").get<std::string>());
  if (j.contains("ctrl")) {
    const auto& ct = j.at("ctrl");
    if (ct.contains("alpha")) c.ctrl_alpha = ct.at("alpha").get<double>();
    if (ct.contains("beta")) c.ctrl_beta = ct.at("beta").get<double>();
    if (ct.contains("p_min")) c.ctrl_p_min = ct.at("p_min").get<double>();
    if (ct.contains("tau")) c.ctrl_tau = ct.at("tau").get<int>();
  }
  if (j.contains("pf")) c.pf = j.at("pf").get<double>();
  if (j.contains("sr_sweeps")) c.sr_sweeps = j.at("sr_sweeps").get<int>();
  if (j.contains("radius")) c.radius = j.at("radius").get<int>();
  if (j.contains("sotea1")) {
    const auto& s1 = j.at("sotea1");
    if (s1.contains("p_add")) c.p_add = s1.at("p_add").get<double>();
    if (s1.contains("p_remove")) c.p_remove = s1.at("p_remove").get<double>();
    if (s1.contains("fitness"))
      c.sotea1_fitness = s1.at("fitness").get<std::string>();
    if (s1.contains("net")) c.sotea1_net = s1.at("net").get<std::string>();
    if (s1.contains("bitflip_rate"))
      c.bitflip_rate = s1.at("bitflip_rate").get<double>();
  }
  if (j.contains("sotea2")) {
    const auto& s2 = j.at("sotea2");
    if (s2.contains("k_min")) c.sotea2.k_min = s2.at("k_min").get<int>();
    if (s2.contains("k_max")) c.sotea2.k_max = s2.at("k_max").get<int>();
    if (s2.contains("walk_retries"))
      c.sotea2.walk_retries = s2.at("walk_retries").get<int>();
  }
  if (j.contains("etv")) {
    const auto& e = j.at("etv");
    if (e.contains("track")) c.track_etv = e.at("track").get<bool>();
    if (e.contains("t_obs")) c.t_obs = e.at("t_obs").get<int>();
    if (e.contains("p_new")) c.p_new = e.at("p_new").get<double>();
  }
  if (j.contains("telemetry")) {
    const auto& t = j.at("telemetry");
    if (t.contains("topology"))
      c.telemetry_topology = t.at("topology").get<bool>();
    if (t.contains("topology_every"))
      c.topology_every = t.at("topology_every").get<int>();
    if (t.contains("edges_every")) c.edges_every = t.at("edges_every").get<int>();
    if (t.contains("diversity"))
      c.telemetry_diversity = t.at("diversity").get<bool>();
    if (t.contains("diversity_every"))
      c.diversity_every = t.at("diversity_every").get<int>();
  }
  return c;
}

}  // namespace evodyn::tools
