#include "evodyn/genome.hpp"

#include <cmath>
#include <stdexcept>

namespace evodyn {

void GeneSpec::validate() const {
  if (lower > upper) throw std::invalid_argument("GeneSpec: lower > upper");
  if (kind == GeneKind::Binary && (lower != 0.0 || upper != 1.0) &&
      !(lower == upper && (lower == 0.0 || lower == 1.0))) {
    throw std::invalid_argument("GeneSpec: binary bounds must be within {0,1}");
  }
  if (kind != GeneKind::Real &&
      (std::floor(lower) != lower || std::floor(upper) != upper)) {
    throw std::invalid_argument("GeneSpec: integer bounds must be integral");
  }
}

Genome random_genome(std::span<const GeneSpec> spec, Rng& rng) {
  if (spec.empty()) throw std::invalid_argument("random_genome: empty spec");
  Genome g(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const GeneSpec& s = spec[i];
    switch (s.kind) {
      case GeneKind::Real:
        g[i] = rng.uniform(s.lower, s.upper);
        break;
      case GeneKind::Integer:
        g[i] = static_cast<double>(
            rng.uniform_int(static_cast<int>(s.lower), static_cast<int>(s.upper)));
        break;
      case GeneKind::Binary:
        g[i] = (s.lower == s.upper) ? s.lower : (rng.bernoulli(0.5) ? 1.0 : 0.0);
        break;
    }
  }
  return g;
}

int hamming_distance(const Genome& a, const Genome& b,
                     std::span<const GeneSpec> spec) {
  if (a.size() != b.size() || a.size() != spec.size())
    throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (spec[i].kind != GeneKind::Binary)
      throw std::invalid_argument("hamming_distance: non-binary gene");
    if (a[i] != b[i]) ++d;
  }
  return d;
}

double normalized_euclidean_distance(const Genome& a, const Genome& b,
                                     std::span<const GeneSpec> spec) {
  if (a.size() != b.size() || a.size() != spec.size())
    throw std::invalid_argument("normalized_euclidean_distance: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double r = spec[i].range();
    if (r <= 0.0) continue;
    const double d = (a[i] - b[i]) / r;
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(a.size()));
}

Genome clamp_to_bounds(Genome g, std::span<const GeneSpec> spec) {
  for (std::size_t i = 0; i < g.size() && i < spec.size(); ++i) {
    const GeneSpec& s = spec[i];
    double v = g[i];
    if (s.kind != GeneKind::Real) v = std::round(v);  // half away from zero
    if (v < s.lower) v = s.lower;
    if (v > s.upper) v = s.upper;
    g[i] = v;
  }
  return g;
}

bool in_bounds(const Genome& g, std::span<const GeneSpec> spec) {
  if (g.size() != spec.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < spec[i].lower || g[i] > spec[i].upper) return false;
    if (spec[i].kind != GeneKind::Real && std::floor(g[i]) != g[i]) return false;
  }
  return true;
}

}  // namespace evodyn
