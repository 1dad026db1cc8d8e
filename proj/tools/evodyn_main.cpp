// Command line front end: single runs, blocked sweeps, distribution analysis
// and reproduction reports over previously produced batch directories.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "config_io.hpp"
#include "evodyn/analysis.hpp"
#include "evodyn/engine.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace evodyn;

namespace {

constexpr const char* kVersion = "evodyn 0.1.0";

// exit codes: 0 ok, 1 usage, 2 config, 3 partial failure
enum ExitCode { kOk = 0, kUsage = 1, kConfig = 2, kPartial = 3 };

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_run_outputs(const fs::path& dir, const RunConfig& cfg,
                       const RunResult& res, const fs::path& etv_tmp = {}) {
  fs::create_directories(dir);
  {
    json j = tools::config_to_json(cfg);
    j["version"] = kVersion;
    std::ofstream os(dir / "config.json");
    os << j.dump(2) << "\n";
  }
  {
    std::ofstream os(dir / "runs.csv");
    os << "generation,evaluations,best_f,feasible\n";
    long evals_per_gen =
        res.best_f.empty()
            ? 0
            : (res.evaluations - cfg.population) /
                  std::max<long>(1, static_cast<long>(res.best_f.size()));
    for (std::size_t g = 0; g < res.best_f.size(); ++g) {
      os << (g + 1) << ',' << (cfg.population + evals_per_gen * (g + 1)) << ',';
      if (res.feasible[g]) os << fmt(res.best_f[g]);
      os << ',' << int(res.feasible[g]) << "\n";
    }
  }
  if (cfg.track_etv) {
    if (!etv_tmp.empty()) {
      fs::rename(etv_tmp, dir / "etv_sizes.csv");
    } else {
      std::ofstream os(dir / "etv_sizes.csv");
      os << "event,operator,size,age,birth_gen,censored\n";
      for (const auto& r : res.etv)
        os << r.event << ',' << r.op << ',' << r.size << ',' << r.age << ','
           << r.birth_gen << ',' << int(r.censored) << "\n";
    }
    // age view excludes censored measurements
    std::ifstream is(dir / "etv_sizes.csv");
    std::ofstream os(dir / "etv_ages.csv");
    os << "event,operator,age,birth_gen\n";
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
      // event,operator,size,age,birth_gen,censored
      const auto c5 = line.rfind(',');
      if (line.substr(c5 + 1) != "0") continue;
      std::stringstream ss(line);
      std::string ev, op, size, age, birth;
      std::getline(ss, ev, ',');
      std::getline(ss, op, ',');
      std::getline(ss, size, ',');
      std::getline(ss, age, ',');
      std::getline(ss, birth, ',');
      os << ev << ',' << op << ',' << age << ',' << birth << "\n";
    }
  }
  if (!res.probabilities.empty()) {
    std::ofstream os(dir / "probabilities.csv");
    os << "cycle,operator,reward,quality,probability\n";
    for (const auto& row : res.probabilities)
      os << row.cycle << ',' << row.op << ',' << fmt(row.reward) << ','
         << fmt(row.quality) << ',' << fmt(row.probability) << "\n";
  }
  if (!res.topology.empty()) {
    std::ofstream os(dir / "topology.csv");
    os << "generation,L,k_ave,c_ave,ck_slope,nu\n";
    for (const auto& row : res.topology)
      os << row.gen << ',' << fmt(row.path_length) << ',' << fmt(row.k_ave)
         << ',' << fmt(row.c_ave) << ',' << fmt(row.ck_slope) << ','
         << fmt(row.knn_slope) << "\n";
  }
  if (!res.diversity.empty()) {
    std::ofstream os(dir / "diversity.csv");
    os << "generation,all,top20\n";
    for (const auto& row : res.diversity)
      os << row.gen << ',' << fmt(row.all) << ',' << fmt(row.top20) << "\n";
  }
  for (const auto& snap : res.edges) {
    char name[32];
    std::snprintf(name, sizeof name, "edges_gen%04ld.txt", snap.gen);
    std::ofstream os(dir / name);
    for (const auto& [u, v] : snap.edges) os << u << ' ' << v << "\n";
  }
  {
    std::ofstream os(dir / "summary.json");
    json j;
    j["evaluations"] = res.evaluations;
    j["found_feasible"] = res.found_feasible;
    if (res.found_feasible) {
      j["best_f"] = res.best_overall_f;
      j["best_phi"] = res.best_eval.phi;
      j["best_x"] = res.best_genome;
    }
    os << j.dump(2) << "\n";
  }
}

int cmd_run(const RunConfig& base, const fs::path& out) {
  RunConfig cfg = base;
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }
  fs::create_directories(out);
  // stream takeover records straight to disk
  fs::path etv_tmp;
  std::ofstream etv_os;
  if (cfg.track_etv) {
    etv_tmp = out / "etv_sizes.csv.part";
    etv_os.open(etv_tmp);
    etv_os << "event,operator,size,age,birth_gen,censored\n";
    cfg.etv_sink = [&etv_os](const EtvRecord& r) {
      etv_os << r.event << ',' << r.op << ',' << r.size << ',' << r.age << ','
             << r.birth_gen << ',' << int(r.censored) << "\n";
    };
  }
  cfg.progress = [&cfg](long gen) {
    if (gen % 100 == 0)
      std::cerr << "gen " << gen << "/" << cfg.generations << "\n";
  };
  RunResult res;
  try {
    res = run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "run error: " << e.what() << "\n";
    return kConfig;
  }
  if (etv_os.is_open()) etv_os.close();
  cfg.etv_sink = nullptr;
  cfg.progress = nullptr;
  write_run_outputs(out, cfg, res, etv_tmp);
  std::cout << out.string() << "\n";
  return kOk;
}

// FNV-1a over the manifest bytes, recorded for provenance
std::uint64_t hash_bytes(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int cmd_sweep(const fs::path& manifest_path, const fs::path& out, int jobs) {
  std::ifstream is(manifest_path);
  if (!is) {
    std::cerr << "cannot read manifest: " << manifest_path << "\n";
    return kConfig;
  }
  std::stringstream buffer;
  buffer << is.rdbuf();
  json manifest;
  try {
    manifest = json::parse(buffer.str());
  } catch (const std::exception& e) {
    std::cerr << "manifest parse error: " << e.what() << "\n";
    return kConfig;
  }
  if (!manifest.contains("configs") || manifest["configs"].empty()) {
    std::cerr << "manifest error: empty configs\n";
    return kConfig;
  }
  std::vector<RunConfig> configs;
  try {
    for (const auto& jc : manifest["configs"])
      configs.push_back(tools::config_from_json(jc));
    for (auto& c : configs) c.validate();
  } catch (const std::exception& e) {
    std::cerr << "manifest config error: " << e.what() << "\n";
    return kConfig;
  }
  std::vector<std::uint64_t> seeds;
  if (manifest.contains("seeds"))
    seeds = manifest["seeds"].get<std::vector<std::uint64_t>>();
  if (seeds.empty()) seeds = {1};

  fs::create_directories(out);
  {
    std::ofstream os(out / "manifest.json");
    os << manifest.dump(2) << "\n";
    std::ofstream hs(out / "manifest.hash");
    hs << std::hex << hash_bytes(buffer.str()) << "\n";
  }

  std::vector<std::string> failures;
  std::ofstream index(out / "index.csv");
  index << "config,seed,dir,problem,family,adapt,best_f,feasible,evaluations\n";
  for (std::size_t c = 0; c < configs.size(); ++c) {
    std::vector<RunResult> results;
    try {
      results = run_batch(std::span{&configs[c], 1}, seeds, jobs);
    } catch (const std::exception& e) {
      for (auto s : seeds) {
        failures.push_back("config " + std::to_string(c) + " seed " +
                           std::to_string(s) + ": " + e.what());
      }
      continue;
    }
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      RunConfig cfg = configs[c];
      cfg.seed = seeds[s];
      char name[64];
      std::snprintf(name, sizeof name, "cfg%03zu_seed%03zu", c, s);
      write_run_outputs(out / name, cfg, results[s]);
      index << c << ',' << seeds[s] << ',' << name << ',' << cfg.problem << ','
            << family_name(cfg.family) << ',' << adaptive_name(cfg.adapt) << ',';
      if (results[s].found_feasible) index << fmt(results[s].best_overall_f);
      index << ',' << int(results[s].found_feasible) << ','
            << results[s].evaluations << "\n";
    }
  }
  if (!failures.empty()) {
    std::cerr << failures.size() << " runs failed:\n";
    for (const auto& f : failures) std::cerr << "  " << f << "\n";
    return kPartial;
  }
  std::cout << out.string() << "\n";
  return kOk;
}

std::vector<double> load_etv_column(const fs::path& file, int column,
                                    bool skip_censored) {
  std::vector<double> values;
  std::ifstream is(file);
  if (!is) throw std::runtime_error("missing file: " + file.string());
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::stringstream ss(line);
    std::string f;
    std::vector<std::string> fields;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (skip_censored && fields.size() >= 6 && fields[5] != "0") continue;
    values.push_back(std::stod(fields[column]));
  }
  return values;
}

int cmd_analyze(const fs::path& run_dir, const std::string& kind, double xmin,
                double xmax, const fs::path& out_file) {
  try {
    std::vector<double> samples;
    if (kind == "sizes")
      samples = load_etv_column(run_dir / "etv_sizes.csv", 2, false);
    else if (kind == "ages")
      samples = load_etv_column(run_dir / "etv_sizes.csv", 3, true);
    else {
      std::cerr << "unknown kind: " << kind << "\n";
      return kUsage;
    }
    const auto dist = log_binned_distribution(samples);
    std::optional<PowerLawFit> fit;
    try {
      fit = fit_power_law(samples, xmin, xmax);
    } catch (const std::exception&) {
      // too little data in range; distribution is still useful
    }
    std::ofstream os(out_file);
    os << "bin_center,density\n";
    for (std::size_t b = 0; b < dist.density.size(); ++b)
      os << fmt(dist.center[b]) << ',' << fmt(dist.density[b]) << "\n";
    if (fit) {
      std::cout << "exponent," << fmt(fit->exponent) << "\n";
      std::cout << "r2," << fmt(fit->r2) << "\n";
      std::cout << "samples_in_range," << fit->samples_in_range << "\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "analyze error: " << e.what() << "\n";
    return kConfig;
  }
}

// ---- report machinery ----

struct IndexRow {
  int config = 0;
  std::uint64_t seed = 0;
  std::string dir, problem, family, adapt;
  double best_f = 0.0;
  bool feasible = false;
};

std::vector<IndexRow> load_index(const fs::path& batch) {
  std::ifstream is(batch / "index.csv");
  if (!is) throw std::runtime_error("missing index.csv in " + batch.string());
  std::vector<IndexRow> rows;
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::stringstream ss(line);
    std::vector<std::string> f;
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(tok);
    if (f.size() < 9) continue;
    IndexRow r;
    r.config = std::stoi(f[0]);
    r.seed = std::stoull(f[1]);
    r.dir = f[2];
    r.problem = f[3];
    r.family = f[4];
    r.adapt = f[5];
    r.feasible = f[7] == "1";
    r.best_f = r.feasible && !f[6].empty() ? std::stod(f[6]) : 0.0;
    rows.push_back(std::move(r));
  }
  return rows;
}

// direction-aware comparison keys: smaller is better
double minimization_key(const IndexRow& r) {
  const auto obj = make_objective(r.problem);
  return obj->spec().direction == Direction::Minimize ? r.best_f : -r.best_f;
}

int report_table3_5(const fs::path& batch) {
  const auto rows = load_index(batch);
  // designs keyed by config index; problems by name
  std::map<std::string, std::map<int, std::vector<double>>> by_problem;
  std::map<int, std::string> design_name;
  for (const auto& r : rows) {
    if (!r.feasible) continue;
    by_problem[r.problem][r.config].push_back(minimization_key(r));
    design_name[r.config] = r.adapt;
  }
  std::map<int, int> best_count, found_best_count;
  for (auto& [problem, designs] : by_problem) {
    double overall_best = std::numeric_limits<double>::infinity();
    for (auto& [d, v] : designs)
      for (double x : v) overall_best = std::min(overall_best, x);
    int best_design = -1;
    double best_median = std::numeric_limits<double>::infinity();
    for (auto& [d, v] : designs) {
      std::vector<double> sorted = v;
      std::sort(sorted.begin(), sorted.end());
      const double median = sorted.size() % 2 == 1
                                ? sorted[sorted.size() / 2]
                                : 0.5 * (sorted[sorted.size() / 2 - 1] +
                                         sorted[sorted.size() / 2]);
      if (median < best_median) {
        best_median = median;
        best_design = d;
      }
      const double tol = 1e-9 + 1e-6 * std::fabs(overall_best);
      for (double x : v)
        if (x <= overall_best + tol) {
          ++found_best_count[d];
          break;
        }
    }
    if (best_design >= 0) ++best_count[best_design];
  }
  const double problems = static_cast<double>(by_problem.size());
  std::cout << "design,pct_best_design,pct_found_best\n";
  for (const auto& [d, name] : design_name) {
    std::cout << name << ',' << fmt(100.0 * best_count[d] / problems) << ','
              << fmt(100.0 * found_best_count[d] / problems) << "\n";
  }
  return kOk;
}

int report_fig3_8(const fs::path& batch, double xmin, double xmax) {
  const auto rows = load_index(batch);
  std::vector<double> sizes;
  for (const auto& r : rows) {
    auto v = load_etv_column(batch / r.dir / "etv_sizes.csv", 2, false);
    sizes.insert(sizes.end(), v.begin(), v.end());
  }
  const auto dist = log_binned_distribution(sizes);
  double exponent = 0.0;
  try {
    exponent = fit_power_law(sizes, xmin, xmax).exponent;
  } catch (const std::exception&) {
  }
  std::cout << "bin_center,density,fitted_exponent\n";
  for (std::size_t b = 0; b < dist.density.size(); ++b)
    std::cout << fmt(dist.center[b]) << ',' << fmt(dist.density[b]) << ','
              << fmt(exponent) << "\n";
  return kOk;
}

int report_table5_3(const fs::path& batch) {
  const auto rows = load_index(batch);
  std::map<std::string, std::map<std::string, std::vector<double>>> by_problem;
  for (const auto& r : rows)
    if (r.feasible) by_problem[r.problem][r.family].push_back(minimization_key(r));
  std::set<std::string> families;
  for (const auto& r : rows) families.insert(r.family);

  std::map<std::string, int> found_best, top5, was_best, found_best_problem;
  std::map<std::string, int> run_count;
  for (auto& [problem, fams] : by_problem) {
    double overall = std::numeric_limits<double>::infinity();
    std::vector<double> all;
    for (auto& [f, v] : fams)
      for (double x : v) {
        overall = std::min(overall, x);
        all.push_back(x);
      }
    std::sort(all.begin(), all.end());
    const double top5_cut = all[std::min(all.size() - 1,
                                         static_cast<std::size_t>(
                                             std::ceil(0.05 * all.size())))];
    const double tol = 1e-9 + 1e-6 * std::fabs(overall);
    std::string best_family;
    double best_median = std::numeric_limits<double>::infinity();
    for (auto& [f, v] : fams) {
      run_count[f] += static_cast<int>(v.size());
      bool any_best = false;
      for (double x : v) {
        if (x <= overall + tol) {
          ++found_best[f];
          any_best = true;
        }
        if (x <= top5_cut) ++top5[f];
      }
      if (any_best) ++found_best_problem[f];
      std::vector<double> sorted = v;
      std::sort(sorted.begin(), sorted.end());
      const double median = sorted.size() % 2 == 1
                                ? sorted[sorted.size() / 2]
                                : 0.5 * (sorted[sorted.size() / 2 - 1] +
                                         sorted[sorted.size() / 2]);
      if (median < best_median) {
        best_median = median;
        best_family = f;
      }
    }
    if (!best_family.empty()) ++was_best[best_family];
  }
  const double problems = static_cast<double>(by_problem.size());
  std::cout << "family,pct_runs_found_best,pct_runs_top5,u_test_p,pct_problems_"
               "best_design,pct_problems_found_best\n";
  for (const auto& fam : families) {
    // ranks of this family's runs against the union of the others, pooled
    // over problems by normalised key
    std::vector<double> a, b;
    for (auto& [problem, fams] : by_problem) {
      for (auto& [f, v] : fams) {
        // per-problem rank normalisation: use within-problem ranks
        for (double x : v) (f == fam ? a : b).push_back(x);
      }
      // convert the raw keys pushed above into within-problem ranks
    }
    // Mann-Whitney on per-problem ranks: recompute properly
    a.clear();
    b.clear();
    for (auto& [problem, fams] : by_problem) {
      std::vector<std::pair<double, bool>> keyed;
      for (auto& [f, v] : fams)
        for (double x : v) keyed.emplace_back(x, f == fam);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        const double rank = static_cast<double>(i) / keyed.size();
        (keyed[i].second ? a : b).push_back(rank);
      }
    }
    double p = 1.0;
    if (!a.empty() && !b.empty()) p = mann_whitney_u(a, b).p_a_less;
    std::cout << fam << ',' << fmt(100.0 * found_best[fam] / run_count[fam])
              << ',' << fmt(100.0 * top5[fam] / run_count[fam]) << ',' << fmt(p)
              << ',' << fmt(100.0 * was_best[fam] / problems) << ','
              << fmt(100.0 * found_best_problem[fam] / problems) << "\n";
  }
  return kOk;
}

int report_table5_4(const fs::path& batch) {
  const auto rows = load_index(batch);
  double L = 0, k = 0, c = 0, ck = 0, nu = 0;
  long n = 0;
  for (const auto& r : rows) {
    std::ifstream is(batch / r.dir / "topology.csv");
    if (!is) continue;
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
      std::stringstream ss(line);
      std::string tok;
      std::vector<double> f;
      bool first = true;
      while (std::getline(ss, tok, ',')) {
        if (first) {
          first = false;
          continue;
        }
        f.push_back(std::stod(tok));
      }
      if (f.size() < 5) continue;
      L += f[0];
      k += f[1];
      c += f[2];
      ck += f[3];
      nu += f[4];
      ++n;
    }
  }
  if (n == 0) {
    std::cerr << "no topology telemetry in batch\n";
    return kConfig;
  }
  std::cout << "metric,measured,reference\n";
  std::cout << "L," << fmt(L / n) << ",5.97\n";
  std::cout << "k_ave," << fmt(k / n) << ",3.6\n";
  std::cout << "c_ave," << fmt(c / n) << ",0.687\n";
  std::cout << "ck_slope," << fmt(ck / n) << ",negative\n";
  std::cout << "nu," << fmt(nu / n) << ",11.8\n";
  return kOk;
}

int report_appendix_c(const fs::path& batch) {
  static const std::map<std::string, double> reference = {
      {"alkylation", 1772.77},     {"heat_exchanger", 7049.25},
      {"pressure_vessel", 5850.38}, {"welded_beam", 1.72485217},
      {"spring", 0.0126652303},    {"gear_train", 2.70e-12},
      {"turbine", 3.05},
  };
  const auto rows = load_index(batch);
  std::map<std::string, double> best;
  for (const auto& r : rows) {
    if (!r.feasible) continue;
    const double key = minimization_key(r);
    auto it = best.find(r.problem);
    if (it == best.end() || key < it->second) best[r.problem] = key;
  }
  std::cout << "problem,best_found,reference\n";
  for (const auto& [problem, key] : best) {
    const auto obj = make_objective(problem);
    const double natural =
        obj->spec().direction == Direction::Minimize ? key : -key;
    auto it = reference.find(problem);
    std::cout << problem << ',' << fmt(natural) << ','
              << (it == reference.end() ? std::string("-") : fmt(it->second))
              << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolutionary dynamics toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // ---- run ----
  auto* run_cmd = app.add_subcommand("run", "execute a single run");
  std::string config_path, problem, family, update, selection, ops, adapt,
      s1_fitness, s1_net;
  std::string out_dir = "out";
  RunConfig base;
  long gens = -1;
  int pop = -1, radius = -1, kmax = -1, t_obs = -1, tau = -1;
  double p_new = -1.0, pf = -1.0;
  std::uint64_t seed = UINT64_MAX;
  bool topo = false, div = false, no_etv = false;
  int edges_every = 0;
  run_cmd->add_option("--config", config_path, "JSON config file");
  run_cmd->add_option("--problem", problem, "problem name");
  run_cmd->add_option("--algo", family, "panmictic|cga|sotea1|sotea2");
  run_cmd->add_option("--seed", seed, "random seed");
  run_cmd->add_option("--gens", gens, "generations");
  run_cmd->add_option("--pop", pop, "population size");
  run_cmd->add_option("--update", update, "gen|ss");
  run_cmd->add_option("--selection", selection,
                      "tour|trun|rand|linrank|exprank|prop|modtour");
  run_cmd->add_option("--ops", ops, "ops10|ops7|ops2");
  run_cmd->add_option("--adapt", adapt,
                      "static2|static10|i_parent|i_median|i_rank|"
                      "i_parent_pursuit|i_median_pursuit|i_rank_pursuit|etv|"
                      "etv_outlier");
  run_cmd->add_option("--radius", radius, "cGA neighborhood radius");
  run_cmd->add_option("--kmax", kmax, "SOTEA II degree ceiling");
  run_cmd->add_option("--sotea1-fitness", s1_fitness, "epistatic|objective");
  run_cmd->add_option("--sotea1-net", s1_net, "sotea|ring|panmictic");
  run_cmd->add_option("--p-new", p_new, "historical uncoupling probability");
  run_cmd->add_option("--t-obs", t_obs, "ancestry list capacity");
  run_cmd->add_option("--tau", tau, "adaptation cycle length");
  run_cmd->add_option("--pf", pf, "stochastic ranking Pf");
  run_cmd->add_flag("--topology", topo, "record topology metrics");
  run_cmd->add_flag("--diversity", div, "record genetic diversity");
  run_cmd->add_flag("--no-etv", no_etv, "disable impact measurement");
  run_cmd->add_option("--edges-every", edges_every, "edge snapshot period");
  run_cmd->add_option("--out", out_dir, "output directory");

  // ---- sweep ----
  auto* sweep_cmd = app.add_subcommand("sweep", "run a manifest of configs x seeds");
  std::string manifest = "manifest.json";
  int jobs = 1;
  std::string sweep_out = "batch";
  sweep_cmd->add_option("--manifest", manifest, "manifest JSON")->required();
  sweep_cmd->add_option("--out", sweep_out, "batch directory");
  sweep_cmd->add_option("--jobs", jobs, "parallel workers");

  // ---- analyze ----
  auto* an_cmd = app.add_subcommand("analyze", "distribution + power-law fit");
  std::string an_dir, an_kind = "sizes", an_out = "distribution.csv";
  double an_xmin = 2.0, an_xmax = 50.0;
  an_cmd->add_option("--run", an_dir, "run directory")->required();
  an_cmd->add_option("--kind", an_kind, "sizes|ages");
  an_cmd->add_option("--xmin", an_xmin, "fit range lower edge");
  an_cmd->add_option("--xmax", an_xmax, "fit range upper edge");
  an_cmd->add_option("--out", an_out, "distribution CSV path");

  // ---- report ----
  auto* rep_cmd = app.add_subcommand("report", "reproduce summary tables");
  std::string batch_dir, templ;
  double rep_xmin = 2.0, rep_xmax = 50.0;
  rep_cmd->add_option("--batch", batch_dir, "batch directory")->required();
  rep_cmd->add_option("--template", templ,
                      "table3_5|fig3_8|table5_3|table5_4|appendixC")
      ->required();
  rep_cmd->add_option("--xmin", rep_xmin, "fig3_8 fit lower edge");
  rep_cmd->add_option("--xmax", rep_xmax, "fig3_8 fit upper edge");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (run_cmd->parsed()) {
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) {
        std::cerr << "cannot read config: " << config_path << "\n";
        return kConfig;
      }
      try {
        base = tools::config_from_json(json::parse(is));
      } catch (const std::exception& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return kConfig;
      }
    }
    try {
      if (!problem.empty()) base.problem = problem;
      if (!family.empty()) base.family = family_from_name(family);
      if (seed != UINT64_MAX) base.seed = seed;
      if (gens >= 0) base.generations = gens;
      if (pop > 0) base.population = pop;
      if (!update.empty()) base.update = update_from_name(update);
      if (!selection.empty()) base.selection = selection_from_name(selection);
      if (!ops.empty()) base.operator_set = ops;
      if (!adapt.empty()) base.adapt = adaptive_from_name(adapt);
      if (radius > 0) base.radius = radius;
      if (kmax > 0) base.sotea2.k_max = kmax;
      if (!s1_fitness.empty()) base.sotea1_fitness = s1_fitness;
      if (!s1_net.empty()) base.sotea1_net = s1_net;
      if (p_new >= 0.0) base.p_new = p_new;
      if (t_obs > 0) base.t_obs = t_obs;
      if (tau > 0) base.ctrl_tau = tau;
      if (pf >= 0.0) base.pf = pf;
      if (topo) base.telemetry_topology = true;
      if (div) base.telemetry_diversity = true;
      if (no_etv) base.track_etv = false;
      if (edges_every > 0) base.edges_every = edges_every;
    } catch (const std::exception& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kConfig;
    }
    // sotea1 runs always carry diversity telemetry (cheap, binary problems)
    if (base.family == AlgorithmFamily::Sotea1) base.telemetry_diversity = true;
    return cmd_run(base, out_dir);
  }
  if (sweep_cmd->parsed()) return cmd_sweep(manifest, sweep_out, jobs);
  if (an_cmd->parsed()) return cmd_analyze(an_dir, an_kind, an_xmin, an_xmax, an_out);
  if (rep_cmd->parsed()) {
    try {
      if (templ == "table3_5") return report_table3_5(batch_dir);
      if (templ == "fig3_8") return report_fig3_8(batch_dir, rep_xmin, rep_xmax);
      if (templ == "table5_3") return report_table5_3(batch_dir);
      if (templ == "table5_4") return report_table5_4(batch_dir);
      if (templ == "appendixC") return report_appendix_c(batch_dir);
      std::cerr << "unknown template: " << templ << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "report error: " << e.what() << "\n";
      return kConfig;
    }
  }
  return kUsage;
}
