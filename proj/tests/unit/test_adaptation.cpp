#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "evodyn/adaptation.hpp"

using namespace evodyn;

TEST_CASE("interpretation formulas (maximization orientation)") {
  FitnessContext ctx;
  ctx.f_parent = 4.0;
  ctx.f_median = 5.0;
  ctx.f_best = 9.0;
  ctx.f_90th = 8.0;
  const std::vector<double> pop{1, 2, 3, 4};
  ctx.population_f = pop;

  CHECK(interpret(InterpretationKind::I1, 3.0, ctx) == 0.0);  // worse than parent
  CHECK(interpret(InterpretationKind::I1, 5.0, ctx) == 1.0);
  CHECK(interpret(InterpretationKind::I2, 3.0, ctx) == -1.0);
  CHECK(interpret(InterpretationKind::I3, 3.0, ctx) == 0.0);  // clamped
  CHECK(interpret(InterpretationKind::I4, 7.0, ctx) == 1.0);  // above median
  CHECK(interpret(InterpretationKind::I4, 4.0, ctx) == 0.0);
  CHECK(interpret(InterpretationKind::I6, 9.5, ctx) == doctest::Approx(0.5));
  CHECK(interpret(InterpretationKind::I7, 8.5, ctx) == doctest::Approx(0.5));
  CHECK(interpret(InterpretationKind::I8, 3.5, ctx) == 3.0);  // counts {1,2,3}
  // I5: scaled improvement over best; degenerate denominator -> 0
  CHECK(interpret(InterpretationKind::I5, 7.0, ctx) ==
        doctest::Approx((7.0 - 9.0) / (9.0 - 5.0)));
  FitnessContext flat = ctx;
  flat.f_median = flat.f_best;
  CHECK(interpret(InterpretationKind::I5, 7.0, flat) == 0.0);
}

TEST_CASE("p_alpha closed form") {
  SUBCASE("worked values") {
    CHECK(p_alpha(0.05, 10) == doctest::Approx(0.59873693923837891).epsilon(1e-12));
    // z = 4: upper tail 3.167e-5; twenty samples barely dent it
    const double pz4 = normal_upper_tail(4.0);
    CHECK(pz4 == doctest::Approx(3.1671241833119924e-05).epsilon(1e-9));
    CHECK(p_alpha(pz4, 20) == doctest::Approx(0.99936677).epsilon(1e-6));
  }
  SUBCASE("measurements below the sample mean get almost no value") {
    // z <= 0 means p_z >= 0.5
    for (int m : {5, 10, 50}) CHECK(p_alpha(0.5, m) <= std::pow(0.5, 5));
  }
  SUBCASE("matches a log-domain binomial evaluation to 1e-12") {
    // independent route: P(Bin(m, p) = 0) via lgamma-based pmf at k = 0
    for (double pz : {1e-6, 1e-4, 0.01, 0.2, 0.5}) {
      for (int m : {1, 3, 10, 27, 50}) {
        const double direct = p_alpha(pz, m);
        double pmf0 = std::exp(std::lgamma(m + 1.0) - std::lgamma(1.0) -
                               std::lgamma(m + 1.0) + m * std::log(1.0 - pz));
        CHECK(std::fabs(direct - pmf0) < 1e-12);
      }
    }
  }
}

TEST_CASE("outlier rewards") {
  SUBCASE("constant batches carry no information") {
    std::vector<std::pair<int, int>> events(10, {0, 1});
    const auto r = outlier_rewards(events, 2);
    CHECK(r[0] == 0.0);
    CHECK(r[1] == 0.0);
  }
  SUBCASE("single-event cycles have undefined spread") {
    std::vector<std::pair<int, int>> events{{0, 30}};
    CHECK(outlier_rewards(events, 1)[0] == 0.0);
  }
  SUBCASE("a large outlier earns its operator most of the reward") {
    std::vector<std::pair<int, int>> events;
    for (int i = 0; i < 30; ++i) events.push_back({0, 1 + (i % 2)});
    events.push_back({1, 50});
    for (int i = 0; i < 9; ++i) events.push_back({1, 1});
    const auto r = outlier_rewards(events, 2);
    CHECK(r[1] > 0.5);
    CHECK(r[1] > r[0]);
  }
  SUBCASE("adding a bigger event never lowers the operator's reward") {
    std::vector<std::pair<int, int>> base;
    for (int i = 0; i < 20; ++i) base.push_back({0, 1 + (i % 3)});
    base.push_back({1, 10});
    const double before = outlier_rewards(base, 2)[1];
    auto more = base;
    more.push_back({1, 40});
    const double after = outlier_rewards(more, 2)[1];
    CHECK(after >= before);
  }
}

TEST_CASE("controller cycle updates") {
  ControllerConfig cc;
  cc.n_ops = 10;
  cc.interpretation = InterpretationKind::I4;

  SUBCASE("probabilities start uniform") {
    Controller c(cc);
    for (double p : c.probabilities()) CHECK(p == doctest::Approx(0.1));
  }
  SUBCASE("matching with equal qualities gives exactly 0.10 each") {
    Controller c(cc);
    for (int op = 0; op < 10; ++op) c.record_interpretation(op, 1.0);
    c.cycle_update();
    for (double p : c.probabilities()) CHECK(p == 0.02 + 0.8 * 0.1);
  }
  SUBCASE("matching with one productive operator: 0.82 vs 0.02") {
    Controller c(cc);
    c.record_interpretation(0, 1.0);
    c.cycle_update();
    CHECK(c.probabilities()[0] == doctest::Approx(0.82));
    for (int op = 1; op < 10; ++op)
      CHECK(c.probabilities()[op] == doctest::Approx(0.02));
  }
  SUBCASE("pursuit arithmetic from the uniform start") {
    cc.strategy = ProbabilityStrategy::Pursuit;
    Controller c(cc);
    CHECK(c.p_max() == doctest::Approx(0.82));
    c.record_interpretation(0, 1.0);
    c.cycle_update();
    // winner: 0.1 + 0.8(0.82-0.1) = 0.676; the rest: 0.1 + 0.8(0.02-0.1) = 0.036
    CHECK(c.probabilities()[0] == doctest::Approx(0.676));
    for (int op = 1; op < 10; ++op)
      CHECK(c.probabilities()[op] == doctest::Approx(0.036));
    double sum = 0.0;
    for (double p : c.probabilities()) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("alpha = 0 freezes the initial probabilities") {
    cc.alpha = 0.0;
    Controller c(cc);
    for (int cyc = 0; cyc < 5; ++cyc) {
      c.record_interpretation(3, 100.0);
      c.cycle_update();
    }
    for (double p : c.probabilities()) CHECK(p == doctest::Approx(0.1));
  }
  SUBCASE("matching is scale invariant in Q") {
    Controller a(cc), b(cc);
    for (int op = 0; op < 10; ++op) {
      a.record_interpretation(op, 0.1 * (op + 1));
      b.record_interpretation(op, 1.7 * 0.1 * (op + 1));
    }
    a.cycle_update();
    b.cycle_update();
    for (int op = 0; op < 10; ++op)
      CHECK(a.probabilities()[op] ==
            doctest::Approx(b.probabilities()[op]).epsilon(1e-12));
  }
  SUBCASE("pursuit sends the unique argmax to p_max's basin") {
    cc.strategy = ProbabilityStrategy::Pursuit;
    Controller c(cc);
    for (int cyc = 0; cyc < 40; ++cyc) {
      c.record_interpretation(4, 1.0);
      c.record_interpretation(2, 0.5);
      c.cycle_update();
    }
    CHECK(c.probabilities()[4] == doctest::Approx(0.82).epsilon(1e-6));
  }
  SUBCASE("floors and sum-to-one after randomized updates") {
    Rng rng(77);
    Controller c(cc);
    for (int cyc = 0; cyc < 2000; ++cyc) {
      const int events = rng.uniform_int(0, 30);
      for (int e = 0; e < events; ++e)
        c.record_interpretation(rng.uniform_int(0, 9), rng.uniform(0, 2));
      c.cycle_update();
      double sum = 0.0;
      for (double p : c.probabilities()) {
        CHECK(p >= 0.02 - 1e-9);
        sum += p;
      }
      CHECK(std::fabs(sum - 1.0) <= 1e-9);
    }
  }
  SUBCASE("no quality signal leaves matching probabilities unchanged") {
    Controller c(cc);
    c.cycle_update();  // nothing recorded, all Q stay 0
    for (double p : c.probabilities()) CHECK(p == doctest::Approx(0.1));
  }
  SUBCASE("raw takeover rewards average per operator") {
    cc.interpretation = InterpretationKind::RawEtv;
    Controller c(cc);
    c.record_etv_event(0, 10);
    c.record_etv_event(0, 20);
    c.record_etv_event(1, 5);
    c.cycle_update();
    CHECK(c.last_rewards()[0] == doctest::Approx(15.0));
    CHECK(c.last_rewards()[1] == doctest::Approx(5.0));
    CHECK(c.last_rewards()[2] == 0.0);
  }
}
