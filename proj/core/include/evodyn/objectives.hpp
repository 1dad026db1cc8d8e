#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evodyn/genome.hpp"

namespace evodyn {

enum class Direction { Minimize, Maximize };

/// Objective value, per-constraint values (g_k <= 0 satisfied) and the total
/// violation phi = sum_k max(0, g_k).
struct Evaluation {
  double f = 0.0;
  std::vector<double> g;
  double phi = 0.0;

  bool feasible() const { return phi <= 0.0; }
};

struct ProblemSpec {
  std::string name;
  Direction direction = Direction::Minimize;
  std::vector<GeneSpec> gene_specs;
  int constraint_count = 0;
  std::optional<double> known_optimum_f;
  std::optional<Genome> known_optimum_x;

  std::size_t dimension() const { return gene_specs.size(); }
};

class Objective {
 public:
  virtual ~Objective() = default;

  const ProblemSpec& spec() const { return spec_; }

  /// Checks dimensionality, evaluates F and constraints, fills phi.
  Evaluation evaluate(const Genome& x) const;

 protected:
  virtual void eval_impl(const Genome& x, Evaluation& out) const = 0;
  ProblemSpec spec_;
};

/// Random-table epistatic binary landscape. Each bit contributes a value
/// looked up from a table of 2^(K+1) uniforms indexed by the bit and its K
/// randomly chosen partner bits. Deterministic for a fixed seed; F in [0,1];
/// maximization.
class NKLandscape {
 public:
  NKLandscape(int n_bits, int k, std::uint64_t seed);

  double value(const Genome& bits) const;

  int n_bits() const { return n_bits_; }
  int k() const { return k_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<int>& links_for(int bit) const { return links_[bit]; }

  /// Text dump / restore so an instance can be pinned for reproducibility.
  void dump(std::ostream& os) const;
  static NKLandscape load(std::istream& is);

 private:
  NKLandscape() = default;
  int n_bits_ = 0;
  int k_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<std::vector<int>> links_;   // per bit: K partner indices
  std::vector<std::vector<double>> tables_;  // per bit: 2^(K+1) values
};

/// Tardy-task scheduling instance grown by the standard recurrence; task j
/// has length L_j, deadline D_j (nondecreasing) and penalty weight W_j.
struct MTTPInstance {
  int n = 0;
  std::vector<int> length;
  std::vector<int> deadline;
  std::vector<int> weight;

  static MTTPInstance generate(int n);
  int penalty_sum() const;
};

/// Factory: canonical names such as "rastrigin", "pressure_vessel",
/// "nk:N=30,K=14,seed=7", "mttp:n=200", "ecc:M=24,N=12", "mmdp:k=20".
/// Throws std::invalid_argument for unknown names.
std::unique_ptr<Objective> make_objective(const std::string& name);

std::vector<std::string> objective_names();

}  // namespace evodyn
