#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lcg/congestion.hpp"
#include "lcg/extractor.hpp"

using namespace lcg;
using testutil::make_const;
using testutil::make_cyc;
using testutil::set_of;

TEST_SUITE_BEGIN("congestion");

TEST_CASE("clot of the all-to-one graph is the overloaded vertex") {
  const ClotSpec spec{Rational(2), 4};
  CHECK(alpha_clot(make_const(), set_of({0, 1, 2, 3}), spec) == set_of({0}));
}

TEST_CASE("clot of the cyclic graph is empty below the threshold") {
  const ClotSpec spec{Rational(3, 2), 4};  // threshold 3, all indegrees 2
  CHECK(alpha_clot(make_cyc(), set_of({0, 1, 2, 3}), spec).empty());
  CHECK(alpha_clot(make_cyc(), set_of({}), spec).empty());
}

TEST_CASE("congested vertices of the all-to-one graph are the whole set") {
  const ClotSpec spec{Rational(2), 4};
  CHECK(congested_set(make_const(), set_of({0, 1, 2, 3}), spec) ==
        set_of({0, 1, 2, 3}));
  CHECK(congested_set(make_cyc(), set_of({0, 1, 2, 3}), ClotSpec{Rational(3, 2), 4})
            .empty());
  CHECK(congested_set(make_const(), set_of({}), spec).empty());
}

TEST_CASE("counting-bound counterexample: the whole set congests at alpha=2") {
  // Fraction of congested vertices is 1 > 1/alpha, so the naive counting
  // bound does not hold for arbitrary graphs under the absolute threshold.
  const auto congested =
      congested_set(make_const(), set_of({0, 1, 2, 3}), ClotSpec{Rational(2), 4});
  CHECK(congested.size() == 4);
  CHECK(Rational(static_cast<long long>(congested.size()), 4) > Rational(1, 2));
}

TEST_CASE("low-congesting verdict with witness") {
  RelevantSystem system;
  system.n = 3;
  system.k = 2;
  system.bound = 4;
  system.sets = {set_of({0, 1, 2, 3})};
  system.provenance = {SetProvenance{0, Bits::from_string("000"), 1}};
  system.validate();
  CHECK_THROWS_AS(system.with_bound(3), ValidationError);  // set would exceed it

  // 0 congested < 0.1 * 4.
  const auto cyc = is_low_congesting(make_cyc(), system, Rational(3, 2), Rational(1, 10));
  CHECK(cyc.ok);
  CHECK_FALSE(cyc.failing_index.has_value());

  // 4 congested >= 0.5 * 4, witnessed by the first set.
  const auto cons = is_low_congesting(make_const(), system, Rational(2), Rational(1, 2));
  CHECK_FALSE(cons.ok);
  CHECK(cons.failing_index == 0);
}

TEST_CASE("empty system is vacuously low-congesting") {
  RelevantSystem system;
  system.n = 3;
  system.k = 2;
  system.bound = 4;
  const auto res = is_low_congesting(make_cyc(), system, Rational(2), Rational(1, 10));
  CHECK(res.ok);
}

TEST_CASE("peel terminates on the cyclic graph and caps on the fixed point") {
  const auto clean = peel(make_cyc(), set_of({0, 1, 2, 3}), ClotSpec{Rational(3, 2), 4}, 10);
  REQUIRE(clean.levels.size() == 2);
  CHECK(clean.levels[0] == set_of({0, 1, 2, 3}));
  CHECK(clean.levels[1].empty());
  CHECK(clean.terminated);

  const auto stuck = peel(make_const(), set_of({0, 1, 2, 3}), ClotSpec{Rational(2), 4}, 5);
  REQUIRE(stuck.levels.size() == 5);
  for (const auto& level : stuck.levels) CHECK(level == set_of({0, 1, 2, 3}));
  CHECK_FALSE(stuck.terminated);

  const auto empty = peel(make_cyc(), set_of({}), ClotSpec{Rational(2), 4}, 1);
  REQUIRE(empty.levels.size() == 1);
  CHECK(empty.terminated);

  CHECK_THROWS_AS(peel(make_cyc(), set_of({}), ClotSpec{Rational(2), 4}, 0),
                  ValidationError);
}

TEST_CASE("per-set counting bound on the named examples") {
  CHECK(check_lemma3(make_cyc(), set_of({0, 1, 2, 3}), Rational(2)));
  CHECK(check_lemma3(make_const(), set_of({0, 1, 2, 3}), Rational(2)));
  CHECK_THROWS_AS(check_lemma3(make_cyc(), set_of({0, 1}), Rational(2)), DomainError);
  CHECK_THROWS_AS(check_lemma3(make_cyc(), set_of({0, 1, 2, 3}), Rational(1)), DomainError);
}

TEST_CASE("per-set counting bound holds on an exhaustive micro sweep") {
  // All 70 size-4 sets of a graph sample, three alphas; the bound is exact
  // because the deviation is the attained supremum.
  GraphParams p{3, 2, 1, 2, Rational(1, 4)};
  const auto alphas = {Rational(3, 2), Rational(2), Rational(201, 100)};
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = random_graph(p, seed);
    std::vector<std::uint64_t> s{0, 1, 2, 3};
    while (true) {
      for (const auto& alpha : alphas) CHECK(check_lemma3(g, s, alpha));
      std::uint64_t i = 4;
      while (i > 0 && s[i - 1] == 8 - 4 + i - 1) --i;
      if (i == 0) break;
      ++s[i - 1];
      for (std::uint64_t j = i; j < 4; ++j) s[j] = s[j - 1] + 1;
    }
  }
}

TEST_CASE("clots and congested sets shrink as alpha grows") {
  GraphParams p{4, 2, 2, 2, Rational(1, 4)};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_graph(p, seed);
    const auto s = set_of({0, 1, 5, 9});
    const ClotSpec lo{Rational(3, 2), 4};
    const ClotSpec hi{Rational(3), 4};
    const auto clot_lo = alpha_clot(g, s, lo);
    const auto clot_hi = alpha_clot(g, s, hi);
    CHECK(std::includes(clot_lo.begin(), clot_lo.end(), clot_hi.begin(), clot_hi.end()));
    const auto cong_lo = congested_set(g, s, lo);
    const auto cong_hi = congested_set(g, s, hi);
    CHECK(std::includes(cong_lo.begin(), cong_lo.end(), cong_hi.begin(), cong_hi.end()));
  }
}

TEST_CASE("subset heredity with the clot held at the base set") {
  GraphParams p{4, 2, 2, 2, Rational(1, 4)};
  const ClotSpec spec{Rational(2), 4};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_graph(p, seed);
    const auto base = set_of({0, 2, 3, 8});
    const auto sub = set_of({2, 8});
    const auto hereditary = congested_set_against(g, sub, base, spec);
    const auto full = congested_set(g, base, spec);
    CHECK(std::includes(full.begin(), full.end(), hereditary.begin(), hereditary.end()));
  }
}

TEST_SUITE_END();
