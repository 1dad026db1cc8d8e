#pragma once

#include <span>
#include <string>
#include <vector>

#include "evodyn/rng.hpp"

namespace evodyn {

enum class GeneKind { Real, Integer, Binary };

/// Bounds and type of a single gene. Binary genes are {0,1}; Integer genes
/// are stored as doubles and snapped to the lattice by clamp_to_bounds.
struct GeneSpec {
  GeneKind kind = GeneKind::Real;
  double lower = 0.0;
  double upper = 1.0;

  double range() const { return upper - lower; }
  void validate() const;
};

inline GeneSpec real_gene(double lo, double hi) { return {GeneKind::Real, lo, hi}; }
inline GeneSpec integer_gene(double lo, double hi) { return {GeneKind::Integer, lo, hi}; }
inline GeneSpec binary_gene() { return {GeneKind::Binary, 0.0, 1.0}; }

using Genome = std::vector<double>;

/// Uniform initialization: reals uniform over [lower,upper], integers uniform
/// over the integral lattice, binary genes a fair coin.
Genome random_genome(std::span<const GeneSpec> spec, Rng& rng);

/// Count of differing positions. Both genomes must be all-binary and of equal
/// length; throws std::invalid_argument otherwise.
int hamming_distance(const Genome& a, const Genome& b,
                     std::span<const GeneSpec> spec);

/// sqrt of the mean over genes of ((a_i-b_i)/range_i)^2. Genes with a
/// degenerate range contribute zero. Used to pick the genetically dominant
/// parent of an offspring; any monotone variant would order parents the same
/// way.
double normalized_euclidean_distance(const Genome& a, const Genome& b,
                                     std::span<const GeneSpec> spec);

/// Clip every gene to its bounds; Integer/Binary genes are first rounded
/// half-away-from-zero. Idempotent.
Genome clamp_to_bounds(Genome g, std::span<const GeneSpec> spec);

bool in_bounds(const Genome& g, std::span<const GeneSpec> spec);

}  // namespace evodyn
