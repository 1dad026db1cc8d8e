#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>

#include "evodyn/engine.hpp"
#include "evodyn/etv.hpp"
#include "evodyn/etv_oracle.hpp"

using namespace evodyn;

namespace {

using History = std::vector<std::uint64_t>;

std::vector<const History*> views(const std::vector<History>& pop) {
  std::vector<const History*> v;
  for (const auto& h : pop) v.push_back(&h);
  return v;
}

std::map<std::uint64_t, EtvRecord> by_event(const std::vector<EtvRecord>& rs) {
  std::map<std::uint64_t, EtvRecord> m;
  for (const auto& r : rs) m[r.event] = r;
  return m;
}

}  // namespace

TEST_CASE("dominant parent selection") {
  const std::vector<GeneSpec> spec{real_gene(0, 10), real_gene(0, 10)};
  const Genome p1{1, 1}, p2{9, 9};
  SUBCASE("single parent") {
    const Genome* ps[] = {&p1};
    CHECK(dominant_parent({5, 5}, ps, spec) == 0);
  }
  SUBCASE("exact match wins") {
    const Genome* ps[] = {&p1, &p2};
    CHECK(dominant_parent({9, 9}, ps, spec) == 1);
  }
  SUBCASE("midpoint ties break to the first parent") {
    const Genome* ps[] = {&p1, &p2};
    CHECK(dominant_parent({5, 5}, ps, spec) == 0);
  }
}

TEST_CASE("record_birth list semantics") {
  Rng rng(3);
  SUBCASE("p_new = 1 keeps every list at length one") {
    EtvTracker t({20, 1.0});
    History parent{1, 2, 3}, child;
    for (int i = 0; i < 10; ++i) {
      t.record_birth(0, 1, parent, 3, rng, child);
      CHECK(child.size() == 1);
    }
  }
  SUBCASE("p_new = 0 appends to the inherited record") {
    EtvTracker t({20, 0.0});
    History parent{5, 6, 7}, child;
    const auto id = t.record_birth(0, 1, parent, 7, rng, child);
    CHECK(child == History{5, 6, 7, id});
  }
  SUBCASE("capacity keeps the newest t_obs entries") {
    EtvTracker t({20, 0.0});
    History parent(20), child;
    for (int i = 0; i < 20; ++i) parent[i] = 100 + i;
    const auto id = t.record_birth(0, 1, parent, 119, rng, child);
    REQUIRE(child.size() == 20);
    CHECK(child.front() == 101);  // oldest entry dropped
    CHECK(child.back() == id);
  }
}

TEST_CASE("a lineage that dies immediately scores size 1, age 1") {
  Rng rng(1);
  EtvTracker t({20, 0.0});
  History h;
  const auto id = t.record_birth(0, 1, {}, 0, rng, h);
  std::vector<History> pop;  // the offspring never enters the population
  t.generation_pass(views(pop), 1);
  const auto recs = t.take_finalized();
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].event == id);
  CHECK(recs[0].size == 1);
  CHECK(recs[0].age == 1);
  CHECK_FALSE(recs[0].censored);
}

TEST_CASE("hand-built genealogy: 2 children, 4 grandchildren, 1 survivor") {
  Rng rng(2);
  EtvTracker t({20, 0.0});
  History e;
  const auto id_e = t.record_birth(0, 0, {}, 0, rng, e);
  {
    std::vector<History> pop{e};
    t.generation_pass(views(pop), 0);
  }
  History c1, c2;
  const auto id_c1 = t.record_birth(0, 1, e, id_e, rng, c1);
  const auto id_c2 = t.record_birth(0, 1, e, id_e, rng, c2);
  {
    std::vector<History> pop{c1, c2};
    t.generation_pass(views(pop), 1);
  }
  History g1, g2, g3, g4;
  const auto id_g1 = t.record_birth(0, 2, c1, id_c1, rng, g1);
  t.record_birth(0, 2, c1, id_c1, rng, g2);
  t.record_birth(0, 2, c2, id_c2, rng, g3);
  t.record_birth(0, 2, c2, id_c2, rng, g4);
  {
    std::vector<History> pop{g1, g2, g3, g4};
    t.generation_pass(views(pop), 2);  // E counted in all four lists
  }
  History h;
  t.record_birth(0, 3, g1, id_g1, rng, h);
  {
    std::vector<History> pop{h};
    t.generation_pass(views(pop), 3);
  }
  {
    std::vector<History> pop;  // extinction
    t.generation_pass(views(pop), 4);
  }
  const auto recs = by_event(t.take_finalized());
  REQUIRE(recs.count(id_e) == 1);
  CHECK(recs.at(id_e).size == 4);  // peak at the grandchildren generation
  CHECK(t.active_count() == 0);
}

TEST_CASE("chain ancestors are zeroed once counts match the descendant") {
  // a and b each keep a side lineage alive, so their counts exceed c's until
  // the side lineages die; at that point only c's spread carries them and
  // both are zeroed in one sweep.
  Rng rng(4);
  EtvTracker t({20, 0.0});
  History a;
  const auto id_a = t.record_birth(0, 0, {}, 0, rng, a);
  {
    std::vector<History> pop{a};
    t.generation_pass(views(pop), 0);
  }
  History b, x;
  const auto id_b = t.record_birth(0, 1, a, id_a, rng, b);
  t.record_birth(0, 1, a, id_a, rng, x);
  {
    std::vector<History> pop{b, x};  // counts: a=2, b=1, x=1
    t.generation_pass(views(pop), 1);
  }
  History c, y;
  const auto id_c = t.record_birth(0, 2, b, id_b, rng, c);
  t.record_birth(0, 2, b, id_b, rng, y);
  {
    std::vector<History> pop{c, y, x};  // a=3, b=2, c=1: all distinct
    t.generation_pass(views(pop), 2);
  }
  CHECK(t.take_finalized().empty());
  // now only c's lineage spreads; x and y die
  History d1, d2;
  t.record_birth(0, 3, c, id_c, rng, d1);
  t.record_birth(0, 3, c, id_c, rng, d2);
  {
    std::vector<History> pop{d1, d2};  // a=b=c=2: the chain collapses
    t.generation_pass(views(pop), 3);
  }
  const auto recs = by_event(t.take_finalized());
  CHECK(recs.count(id_a) == 1);
  CHECK(recs.count(id_b) == 1);
  CHECK(recs.count(id_c) == 0);        // c itself is still informative
  CHECK(recs.at(id_a).size == 3);      // peak before the collapse
  CHECK(recs.at(id_b).size == 2);
}

TEST_CASE("clone saturation: a founder spreading over N = 5 scores size 5") {
  Rng rng(6);
  EtvTracker t({20, 0.0});
  History f;
  const auto id_f = t.record_birth(0, 0, {}, 0, rng, f);
  std::vector<History> kids(5);
  std::vector<std::uint64_t> kid_ids(5);
  for (int i = 0; i < 5; ++i)
    kid_ids[i] = t.record_birth(0, 1, f, id_f, rng, kids[i]);
  t.generation_pass(views(kids), 1);
  // next generation all descends from kid 0: founder and kid0 tie at 5
  std::vector<History> grand(5);
  for (int i = 0; i < 5; ++i)
    t.record_birth(0, 2, kids[0], kid_ids[0], rng, grand[i]);
  t.generation_pass(views(grand), 2);
  const auto recs = by_event(t.take_finalized());
  REQUIRE(recs.count(id_f) == 1);
  CHECK(recs.at(id_f).size == 5);
  CHECK_FALSE(recs.at(id_f).censored);
}

TEST_CASE("oracle equivalence on engine runs") {
  // a spread of policies; N <= 30, <= 50 generations
  struct Case {
    const char* problem;
    AlgorithmFamily family;
    UpdateKind update;
    SelectionScheme sel;
    int n;
    long gens;
    double p_new;
  };
  const Case cases[] = {
      {"quadratic", AlgorithmFamily::Panmictic, UpdateKind::SteadyState,
       SelectionScheme::Tournament, 12, 40, 0.0},
      {"rastrigin", AlgorithmFamily::Panmictic, UpdateKind::Generational,
       SelectionScheme::Truncation, 20, 30, 0.0},
      {"griewangk", AlgorithmFamily::Panmictic, UpdateKind::SteadyState,
       SelectionScheme::Random, 16, 35, 0.2},
      {"bohachevsky", AlgorithmFamily::Cga, UpdateKind::SteadyState,
       SelectionScheme::Tournament, 14, 30, 0.0},
      {"mmdp:k=2", AlgorithmFamily::Panmictic, UpdateKind::SteadyState,
       SelectionScheme::Tournament, 10, 50, 0.0},
  };
  for (const auto& c : cases) {
    RunConfig cfg;
    cfg.problem = c.problem;
    cfg.family = c.family;
    cfg.update = c.update;
    cfg.selection = c.sel;
    cfg.population = c.n;
    cfg.generations = c.gens;
    cfg.p_new = c.p_new;
    cfg.seed = 1000 + static_cast<std::uint64_t>(c.gens);
    cfg.record_genealogy = true;
    const RunResult res = run(cfg);
    REQUIRE(res.genealogy);
    auto expected = etv_bruteforce_oracle(*res.genealogy, {cfg.t_obs, cfg.p_new},
                                          cfg.generations);
    auto actual = res.etv;
    std::sort(actual.begin(), actual.end(),
              [](const EtvRecord& x, const EtvRecord& y) { return x.event < y.event; });
    REQUIRE(actual.size() == expected.size());
    for (std::size_t i = 0; i < actual.size(); ++i) {
      CAPTURE(c.problem);
      CAPTURE(actual[i].event);
      CHECK(actual[i].event == expected[i].event);
      CHECK(actual[i].size == expected[i].size);
      CHECK(actual[i].age == expected[i].age);
      CHECK(actual[i].censored == expected[i].censored);
      CHECK(actual[i].op == expected[i].op);
      // sizes are bounded by the population
      CHECK(actual[i].size >= 1);
      CHECK(actual[i].size <= c.n);
    }
  }
}

TEST_CASE("oracle rejects oversized graphs") {
  Genealogy g;
  g.nodes.resize(10);
  CHECK_THROWS_AS(etv_bruteforce_oracle(g, {20, 0.0}, 1, 5), std::invalid_argument);
}
