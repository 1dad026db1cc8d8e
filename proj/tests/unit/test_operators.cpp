#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "evodyn/operators.hpp"

using namespace evodyn;

namespace {

std::vector<GeneSpec> box(std::size_t n, double lo, double hi) {
  return std::vector<GeneSpec>(n, real_gene(lo, hi));
}

Genome apply(OperatorId id, const std::vector<Genome>& parents,
             std::span<const GeneSpec> spec, Rng& rng) {
  std::vector<const Genome*> ptrs;
  for (const auto& p : parents) ptrs.push_back(&p);
  return apply_operator(default_operator(id), ptrs, spec, rng);
}

}  // namespace

TEST_CASE("wright's heuristic: h = r(g1-g2) + g1 with r = 0.5") {
  Rng rng(1);
  const auto spec = box(2, -10, 10);
  const Genome h = apply(OperatorId::WrightHeuristic, {{2, 2}, {0, 0}}, spec, rng);
  CHECK(h == Genome{3, 3});
}

TEST_CASE("extended line: h = r(g2-g1) + g1 with r = 0.3") {
  Rng rng(1);
  const auto spec = box(2, -100, 100);
  const Genome h = apply(OperatorId::ExtendedLine, {{0, 0}, {10, 10}}, spec, rng);
  CHECK(h[0] == doctest::Approx(3.0));
  CHECK(h[1] == doctest::Approx(3.0));
}

TEST_CASE("blx offspring genes stay inside the widened interval") {
  Rng rng(9);
  const auto spec = box(1, -100, 100);
  double lo = 100, hi = -100;
  for (int t = 0; t < 4000; ++t) {
    const Genome h = apply(OperatorId::BlxAlpha, {{0}, {10}}, spec, rng);
    lo = std::min(lo, h[0]);
    hi = std::max(hi, h[0]);
    CHECK(h[0] >= -2.0);
    CHECK(h[0] <= 12.0);
  }
  // the widened ends are actually reachable
  CHECK(lo < -1.0);
  CHECK(hi > 11.0);
}

TEST_CASE("differential operator: zero difference collapses to g2 or copies g1") {
  Rng rng(4);
  const auto spec = box(3, -10, 10);
  const Genome g1{1, 1, 1}, g2{5, 5, 5}, g3{2, 2, 2}, g4{2, 2, 2};
  for (int t = 0; t < 200; ++t) {
    const Genome h = apply(OperatorId::DifferentialEvolution, {g1, g2, g3, g4},
                           spec, rng);
    for (double v : h) CHECK((v == 1.0 || v == 5.0));
  }
}

TEST_CASE("uniform crossover membership and identical-parent fixture") {
  Rng rng(12);
  const auto spec = box(4, -5, 5);
  const Genome g1{1, 2, 3, 4}, g2{-1, -2, -3, -4};
  for (int t = 0; t < 100; ++t) {
    const Genome h = apply(OperatorId::UniformCrossover, {g1, g2}, spec, rng);
    for (std::size_t i = 0; i < 4; ++i) CHECK((h[i] == g1[i] || h[i] == g2[i]));
  }
  CHECK(apply(OperatorId::UniformCrossover, {g1, g1}, spec, rng) == g1);
}

TEST_CASE("simple crossover makes a prefix of g1 plus a suffix of g2") {
  Rng rng(3);
  const auto spec = box(6, -10, 10);
  const Genome g1{1, 1, 1, 1, 1, 1}, g2{2, 2, 2, 2, 2, 2};
  for (int t = 0; t < 200; ++t) {
    const Genome h = apply(OperatorId::SimpleCrossover, {g1, g2}, spec, rng);
    bool crossed = false;
    for (double v : h) {
      if (v == 2.0) crossed = true;
      if (crossed) CHECK(v == 2.0);  // once on g2, stays on g2
    }
  }
}

TEST_CASE("swap moves exactly the most similar differing gene") {
  Rng rng(5);
  const auto spec = box(3, -10, 10);
  // differences: |1-9| = 8, |2-2.5| = 0.5, |3-7| = 4 -> gene 1 swaps
  const Genome h = apply(OperatorId::Swap, {{1, 2, 3}, {9, 2.5, 7}}, spec, rng);
  CHECK(h == Genome{1, 2.5, 3});

  SUBCASE("literal rank predicate swaps the most different gene instead") {
    OperatorSpec op = default_operator(OperatorId::Swap);
    op.swap_literal_rank_rule = true;
    const Genome g1{1, 2, 3}, g2{9, 2.5, 7};
    const Genome* ptrs[] = {&g1, &g2};
    const Genome h2 = apply_operator(op, ptrs, spec, rng);
    CHECK(h2 == Genome{9, 2, 3});
  }
}

TEST_CASE("creep perturbs exactly one gene with sigma = range/1000") {
  Rng rng(6);
  const auto spec = box(5, 0, 100);
  const Genome g1{50, 50, 50, 50, 50};
  for (int t = 0; t < 200; ++t) {
    const Genome h = apply(OperatorId::Creep, {g1}, spec, rng);
    int changed = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      if (h[i] != 50.0) {
        ++changed;
        CHECK(std::fabs(h[i] - 50.0) < 1.0);  // 10 sigma
      }
    }
    CHECK(changed <= 1);
  }
}

TEST_CASE("point mutation resamples exactly one gene over its range") {
  Rng rng(7);
  const auto spec = box(5, -1, 1);
  const Genome g1{0, 0, 0, 0, 0};
  for (int t = 0; t < 200; ++t) {
    const Genome h = apply(OperatorId::PointMutation, {g1}, spec, rng);
    int changed = 0;
    for (double v : h) {
      if (v != 0.0) ++changed;
      CHECK(v >= -1.0);
      CHECK(v <= 1.0);
    }
    CHECK(changed <= 1);
  }
}

TEST_CASE("raise perturbs all genes with sigma = range/100") {
  Rng rng(8);
  const auto spec = box(4, 0, 100);
  const Genome g1{50, 50, 50, 50};
  const Genome h = apply(OperatorId::Raise, {g1}, spec, rng);
  int changed = 0;
  for (double v : h)
    if (v != 50.0) ++changed;
  CHECK(changed == 4);
}

TEST_CASE("offspring are clamped to bounds") {
  Rng rng(11);
  const auto spec = box(1, 0, 2.5);
  // wright extrapolates past the better parent: 0.5*(2.5-0)+2.5 = 3.75 -> 2.5
  const Genome h = apply(OperatorId::WrightHeuristic, {{2.5}, {0}}, spec, rng);
  CHECK(h[0] == 2.5);
}

TEST_CASE("operators are reproducible bit for bit") {
  const auto spec = box(6, -5, 5);
  const Genome g1{1, -2, 3, -4, 0.5, 2}, g2{0, 2, -3, 4, -0.5, 1};
  for (OperatorId id : {OperatorId::UniformCrossover, OperatorId::BlxAlpha,
                        OperatorId::SimpleCrossover, OperatorId::Creep,
                        OperatorId::PointMutation, OperatorId::Raise}) {
    Rng a(99), b(99);
    std::vector<Genome> parents{g1, g2};
    parents.resize(operator_arity(id) == 1 ? 1 : 2);
    CHECK(apply(id, parents, spec, a) == apply(id, parents, spec, b));
  }
}

TEST_CASE("arity checks") {
  Rng rng(1);
  const auto spec = box(2, 0, 1);
  const Genome g{0.5, 0.5};
  const Genome* one[] = {&g};
  CHECK_THROWS_AS(
      apply_operator(default_operator(OperatorId::UniformCrossover), one, spec, rng),
      std::invalid_argument);
  CHECK_THROWS_AS(apply_operator(default_operator(OperatorId::PointMutation),
                                 std::span<const Genome* const>{}, spec, rng),
                  std::invalid_argument);
  CHECK(operator_arity(OperatorId::DifferentialEvolution) == 4);
}

TEST_CASE("operator sets and static probabilities") {
  CHECK(operator_set("ops10").size() == 10);
  CHECK(operator_set("ops7").size() == 7);
  const auto ops2 = operator_set("ops2");
  CHECK(ops2.size() == 2);
  const auto p = static_probabilities(ops2, "ops2");
  CHECK(p[0] == 0.98);  // uniform crossover
  CHECK(p[1] == 0.02);  // point mutation
  const auto p10 = static_probabilities(operator_set("ops10"), "ops10");
  for (double v : p10) CHECK(v == doctest::Approx(0.1));
  CHECK_THROWS_AS(operator_set("ops99"), std::invalid_argument);
}
