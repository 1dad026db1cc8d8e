#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evodyn/selection.hpp"

using namespace evodyn;

TEST_CASE("stochastic ranking") {
  Rng rng(17);
  SUBCASE("all feasible: ascending F for any pf") {
    const std::vector<double> f{5, 1, 4, 2, 3};
    const std::vector<double> phi(5, 0.0);
    for (double pf : {0.0, 0.45, 1.0}) {
      const auto order = stochastic_rank(f, phi, pf, 5, rng);
      CHECK(order == std::vector<std::size_t>{1, 3, 4, 2, 0});
    }
  }
  SUBCASE("pf = 0: feasible block first, infeasible ascending by phi") {
    const std::vector<double> f{9, 1, 8, 2};
    const std::vector<double> phi{0.0, 3.0, 0.0, 1.0};
    const auto order = stochastic_rank(f, phi, 0.0, 8, rng);
    // feasible (0,2) precede infeasible; infeasible sorted by phi: 3 then 1
    CHECK(phi[order[0]] == 0.0);
    CHECK(phi[order[1]] == 0.0);
    CHECK(order[2] == 3);
    CHECK(order[3] == 1);
    // feasible block ascending F
    CHECK(f[order[0]] < f[order[1]]);
  }
  SUBCASE("pf = 1: ascending F regardless of phi") {
    const std::vector<double> f{4, 3, 2, 1};
    const std::vector<double> phi{0, 100, 0, 100};
    const auto order = stochastic_rank(f, phi, 1.0, 8, rng);
    CHECK(order == std::vector<std::size_t>{3, 2, 1, 0});
  }
  SUBCASE("result is a permutation") {
    Rng data_rng(5);
    std::vector<double> f(20), phi(20);
    for (int i = 0; i < 20; ++i) {
      f[i] = data_rng.uniform(0, 10);
      phi[i] = data_rng.bernoulli(0.5) ? data_rng.uniform(0, 5) : 0.0;
    }
    auto order = stochastic_rank(f, phi, 0.45, 20, rng);
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < 20; ++i) CHECK(order[i] == i);
  }
}

TEST_CASE("tournament selection") {
  Rng rng(23);
  const std::vector<double> scores{5, 3, 8, 1, 9, 2};
  SUBCASE("q = pop size without replacement picks the global best") {
    for (int t = 0; t < 20; ++t)
      CHECK(tournament_select(scores, 6, rng) == 3);
  }
  SUBCASE("q = 1 is uniform") {
    std::vector<int> hits(6, 0);
    for (int t = 0; t < 6000; ++t) ++hits[tournament_select(scores, 1, rng)];
    for (int h : hits) CHECK(std::fabs(h - 1000.0) < 150.0);
  }
  SUBCASE("q = 2 with replacement picks the better of {1,9} with prob 3/4") {
    const std::vector<double> two{1, 9};
    int best = 0;
    const int draws = 40000;
    for (int t = 0; t < draws; ++t)
      if (tournament_select(two, 2, rng, true) == 0) ++best;
    CHECK(std::fabs(best / static_cast<double>(draws) - 0.75) < 0.01);
  }
  SUBCASE("q larger than population without replacement throws") {
    CHECK_THROWS_AS(tournament_select(scores, 7, rng), std::invalid_argument);
  }
}

TEST_CASE("truncation selection") {
  const std::vector<double> scores{0.5, 0.1, 0.9, 0.3, 0.7, 0.2, 1.0, 0.4, 0.6, 0.8};
  SUBCASE("T = 1 keeps everyone") {
    CHECK(truncation_select(scores, 1.0).size() == 10);
  }
  SUBCASE("T = 0.5 keeps the 5 best") {
    const auto kept = truncation_select(scores, 0.5);
    REQUIRE(kept.size() == 5);
    for (auto i : kept) CHECK(scores[i] <= 0.5);
  }
  SUBCASE("ties break by original index") {
    const std::vector<double> tied{1, 0, 0, 1};
    const auto kept = truncation_select(tied, 0.5);
    CHECK(kept == std::vector<std::size_t>{1, 2});
  }
  SUBCASE("floor(T*N) = 0 is an error") {
    CHECK_THROWS_AS(truncation_select(scores, 0.05), std::invalid_argument);
  }
}

TEST_CASE("ranking selection") {
  Rng rng(31);
  SUBCASE("linear ranking N = 2 with defaults gives weight (1,0)") {
    const std::vector<double> scores{1.0, 9.0};
    for (int t = 0; t < 50; ++t)
      CHECK(linear_rank_select(scores, 1.0, 0.0, rng) == 0);
  }
  SUBCASE("exponential c -> 1 approaches uniform") {
    const std::vector<double> scores{1, 2, 3, 4};
    std::vector<int> hits(4, 0);
    for (int t = 0; t < 40000; ++t)
      ++hits[exponential_rank_select(scores, 0.999, rng)];
    for (int h : hits) CHECK(std::fabs(h - 10000.0) < 600.0);
  }
  SUBCASE("proportional fitness (3,1) picks first with prob 0.75") {
    const std::vector<double> fitness{3, 1};
    int first = 0;
    const int draws = 40000;
    for (int t = 0; t < draws; ++t)
      if (proportional_select(fitness, rng) == 0) ++first;
    CHECK(std::fabs(first / static_cast<double>(draws) - 0.75) < 0.01);
  }
  SUBCASE("proportional rejects nonpositive fitness") {
    const std::vector<double> bad{3, 0};
    CHECK_THROWS_AS(proportional_select(bad, rng), std::invalid_argument);
  }
  SUBCASE("exponential requires 0 < c < 1") {
    const std::vector<double> scores{1, 2};
    CHECK_THROWS_AS(exponential_rank_select(scores, 1.0, rng), std::invalid_argument);
  }
}

TEST_CASE("modified tournament step") {
  Rng rng(37);
  SUBCASE("one removal from a pool of two keeps the better") {
    const std::vector<double> scores{4.0, 2.0};
    const auto alive = modified_tournament_step(scores, 1, rng);
    CHECK(alive == std::vector<std::size_t>{1});
  }
  SUBCASE("equal fitness yields a uniform-random survivor set") {
    const std::vector<double> scores(4, 1.0);
    std::vector<int> survived(4, 0);
    for (int t = 0; t < 8000; ++t) {
      for (auto i : modified_tournament_step(scores, 2, rng)) ++survived[i];
    }
    for (int s : survived) CHECK(std::fabs(s - 4000.0) < 300.0);
  }
  SUBCASE("the worst of {1,2,3,4} dies at elevated rate") {
    const std::vector<double> scores{1, 2, 3, 4};
    int worst_survived = 0;
    const int trials = 4000;
    for (int t = 0; t < trials; ++t) {
      const auto alive = modified_tournament_step(scores, 2, rng);
      if (std::find(alive.begin(), alive.end(), 3u) != alive.end())
        ++worst_survived;
    }
    // it enters a tournament and loses whenever drawn: survival well under half
    CHECK(worst_survived < trials / 2);
  }
  SUBCASE("pool smaller than two throws") {
    const std::vector<double> one{1.0};
    CHECK_THROWS_AS(modified_tournament_step(one, 1, rng), std::invalid_argument);
  }
}

TEST_CASE("deterministic crowding") {
  Rng rng(41);
  SUBCASE("children identical to parents leave the population unchanged") {
    // child 0 clones parent 1, child 1 clones parent 2: each child matches
    // its own parent (distance 0) and brings no strict improvement
    const std::vector<double> parent_scores{3, 1, 4, 2};
    int replacements = 0;
    std::size_t cur_p1 = 0, cur_p2 = 0;
    CrowdingCallbacks cb;
    cb.distance = [&](std::size_t parent, int child) {
      const std::size_t clone_of = child == 0 ? cur_p1 : cur_p2;
      return parent == clone_of ? 0.0 : 1.0;
    };
    cb.child_score = [&](int c) {
      return c == 0 ? parent_scores[cur_p1] : parent_scores[cur_p2];
    };
    cb.replace = [&](std::size_t, int) { ++replacements; };
    deterministic_crowding_generation(
        4, parent_scores,
        [&](std::size_t p1, std::size_t p2) {
          cur_p1 = p1;
          cur_p2 = p2;
        },
        cb, rng);
    CHECK(replacements == 0);
  }
  SUBCASE("child matched to the nearer parent replaces it only when fitter") {
    // 2 individuals: p0 score 5, p1 score 1; child0 near p0 and fitter
    const std::vector<double> parent_scores{5, 1};
    std::vector<std::pair<std::size_t, int>> replaced;
    CrowdingCallbacks cb;
    cb.distance = [&](std::size_t parent, int child) {
      if (parent == 0 && child == 0) return 0.1;
      if (parent == 1 && child == 1) return 0.1;
      return 5.0;
    };
    cb.child_score = [](int child) { return child == 0 ? 2.0 : 9.0; };
    cb.replace = [&](std::size_t parent, int child) {
      replaced.emplace_back(parent, child);
    };
    deterministic_crowding_generation(2, parent_scores,
                                      [](std::size_t, std::size_t) {}, cb, rng);
    REQUIRE(replaced.size() == 1);
    CHECK(replaced[0].first == 0);   // p0 replaced
    CHECK(replaced[0].second == 0);  // by its matched child
  }
  SUBCASE("pairing consumes every slot exactly once") {
    const std::vector<double> parent_scores(8, 1.0);
    std::vector<int> seen(8, 0);
    CrowdingCallbacks cb;
    cb.distance = [](std::size_t, int) { return 1.0; };
    cb.child_score = [](int) { return 99.0; };
    cb.replace = [](std::size_t, int) {};
    deterministic_crowding_generation(
        8, parent_scores,
        [&](std::size_t p1, std::size_t p2) {
          ++seen[p1];
          ++seen[p2];
        },
        cb, rng);
    for (int s : seen) CHECK(s == 1);
  }
  SUBCASE("odd population size throws") {
    const std::vector<double> scores(3, 1.0);
    CrowdingCallbacks cb;
    CHECK_THROWS_AS(deterministic_crowding_generation(
                        3, scores, [](std::size_t, std::size_t) {}, cb, rng),
                    std::invalid_argument);
  }
}
