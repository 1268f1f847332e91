#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lcg/nw_generator.hpp"
#include "lcg/rng.hpp"

using namespace lcg;
using testutil::set_of;

TEST_SUITE_BEGIN("nw_generator");

TEST_CASE("greedy design on the smallest instances") {
  const auto single = greedy_design(1, 3, 1);
  CHECK(single.l == 3);
  REQUIRE(single.sets.size() == 1);
  CHECK(single.sets[0] == std::vector<std::uint32_t>{0, 1, 2});

  const auto disjoint = greedy_design(2, 2, 1);
  CHECK(disjoint.sets[0] == std::vector<std::uint32_t>{0, 1});
  // max_overlap=1 admits {0,2} as the lexicographically first successor.
  CHECK(disjoint.sets[1] == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("greedy design grows the ground set only when forced") {
  // With zero shared elements allowed... max_overlap must be >= 1, so the
  // tightest packing at t=2, overlap 1 walks all pairs before growing.
  const auto d = greedy_design(4, 2, 1);
  CHECK(d.sets == std::vector<std::vector<std::uint32_t>>{
                      {0, 1}, {0, 2}, {1, 2}, {0, 3}});
  CHECK(d.l == 4);
  CHECK(max_pairwise_overlap(d) <= 1);
}

TEST_CASE("greedy design respects the overlap bound at moderate sizes") {
  for (std::uint32_t t : {3u, 5u}) {
    for (std::uint32_t a = 1; a <= 2; ++a) {
      const auto d = greedy_design(40, t, a);
      CHECK(d.sets.size() == 40);
      CHECK(max_pairwise_overlap(d) <= a);
      CHECK(d.l >= t);
    }
  }
}

namespace {

// Definitional reference: enumerate every t-subset of the current ground set
// in lex order and take the first that meets the overlap bound, growing the
// ground set by one element whenever none qualifies.
std::vector<std::vector<std::uint32_t>> reference_greedy(std::uint64_t r,
                                                         std::uint32_t t,
                                                         std::uint32_t a,
                                                         std::uint32_t& l_out) {
  std::vector<std::vector<std::uint32_t>> chosen;
  std::uint32_t l = 0;
  auto valid = [&](const std::vector<std::uint32_t>& cand) {
    for (const auto& prev : chosen) {
      std::uint32_t overlap = 0;
      for (std::uint32_t e : cand)
        overlap += std::binary_search(prev.begin(), prev.end(), e) ? 1 : 0;
      if (overlap > a) return false;
    }
    return true;
  };
  for (std::uint64_t i = 0; i < r; ++i) {
    while (true) {
      bool found = false;
      if (l >= t) {
        std::vector<std::uint32_t> cand(t);
        for (std::uint32_t j = 0; j < t; ++j) cand[j] = j;
        while (true) {
          if (valid(cand)) {
            chosen.push_back(cand);
            found = true;
            break;
          }
          std::uint32_t j = t;
          while (j > 0 && cand[j - 1] == l - t + j - 1) --j;
          if (j == 0) break;
          ++cand[j - 1];
          for (std::uint32_t x = j; x < t; ++x) cand[x] = cand[x - 1] + 1;
        }
      }
      if (found) break;
      ++l;
    }
  }
  l_out = l;
  return chosen;
}

}  // namespace

TEST_CASE("greedy design matches the definitional reference") {
  for (const auto& [r, t, a] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
           {12, 2, 1}, {30, 3, 1}, {30, 3, 2}, {25, 4, 2}, {60, 4, 3}, {10, 3, 3}}) {
    std::uint32_t ref_l = 0;
    const auto expected = reference_greedy(r, t, a, ref_l);
    const auto d = greedy_design(r, t, a);
    CHECK(d.sets == expected);
    CHECK(d.l == ref_l);
  }
}

TEST_CASE("greedy design is deterministic") {
  const auto a = greedy_design(25, 4, 2);
  const auto b = greedy_design(25, 4, 2);
  CHECK(a.sets == b.sets);
  CHECK(a.l == b.l);
}

TEST_CASE("greedy design rejects bad shapes") {
  CHECK_THROWS_AS(greedy_design(0, 3, 1), ValidationError);
  CHECK_THROWS_AS(greedy_design(3, 3, 0), ValidationError);
  CHECK_THROWS_AS(greedy_design(3, 3, 4), ValidationError);
}

TEST_CASE("default knobs follow the log rules") {
  CHECK(default_design_t(1536) == 11);
  CHECK(default_design_overlap(11) == 4);
  CHECK(default_design_t(2) == 1);
  CHECK(default_design_overlap(1) == 1);
}

TEST_CASE("generator output is the per-set parity of the seed") {
  Design d;
  d.l = 4;
  d.t = 2;
  d.max_overlap = 1;
  d.sets = {{0, 1}, {2, 3}};
  CHECK(nw_output(d, Bits::from_string("1100")) == Bits::from_string("00"));
  CHECK(nw_output(d, Bits::from_string("1000")) == Bits::from_string("10"));
  CHECK(nw_output(d, Bits::from_string("0000")) == Bits::from_string("00"));
  CHECK_THROWS_AS(nw_output(d, Bits::from_string("10")), DomainError);
}

TEST_CASE("generator is linear over bit-xor and single flips hit set members") {
  const auto d = greedy_design(24, 4, 2);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const Bits s1 = rng.bits(d.l);
    const Bits s2 = rng.bits(d.l);
    CHECK(nw_output(d, s1 ^ s2) == (nw_output(d, s1) ^ nw_output(d, s2)));
  }
  // Flipping seed bit e flips exactly the outputs whose sets contain e.
  const Bits base(d.l);
  const auto zero_out = nw_output(d, base);
  for (std::uint32_t e = 0; e < d.l; ++e) {
    Bits flipped(d.l);
    flipped.set(e, true);
    const auto out = nw_output(d, flipped);
    for (std::size_t i = 0; i < d.sets.size(); ++i) {
      const bool contains = std::find(d.sets[i].begin(), d.sets[i].end(), e) !=
                            d.sets[i].end();
      CHECK(out.get(i) == (zero_out.get(i) ^ contains));
    }
  }
}

TEST_CASE("graph_from_seed wraps the output as a table") {
  GraphParams p{3, 2, 1, 2, Rational(1, 4)};
  const auto d = greedy_design(p.table_bits(), 5, 2);
  const auto zero = graph_from_seed(p, d, Bits(d.l));
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t j = 0; j < 2; ++j) CHECK(zero.neighbor(x, j) == 0);

  SplitMix64 rng(9);
  const Bits seed = rng.bits(d.l);
  CHECK(graph_from_seed(p, d, seed).table() == graph_from_seed(p, d, seed).table());

  const auto small = greedy_design(8, 3, 1);
  CHECK_THROWS_AS(graph_from_seed(p, small, Bits(small.l)), DomainError);
}

TEST_CASE("seed search returns the zero seed on an empty system") {
  GraphParams p{3, 2, 1, 2, Rational(1, 4)};
  const auto d = greedy_design(p.table_bits(), 5, 2);
  RelevantSystem empty;
  empty.n = 3;
  empty.k = 2;
  empty.bound = 4;
  const auto res = solve_R(p, d, empty, Rational(2), Rational(1, 2), 16,
                           SearchMode::exhaustive, 0);
  CHECK(res.found);
  CHECK(res.seed == Bits(d.l));
  CHECK(res.seeds_examined == 1);
  CHECK(res.mode == SearchMode::exhaustive);
}

TEST_CASE("seed search reports not-found when the budget is too small") {
  GraphParams p{3, 2, 1, 2, Rational(1, 4)};
  const auto d = greedy_design(p.table_bits(), 5, 2);
  RelevantSystem system;
  system.n = 3;
  system.k = 2;
  system.bound = 4;
  system.sets = {set_of({0, 1, 2, 3})};
  system.provenance = {SetProvenance{0, Bits::from_string("000"), 1}};
  // The zero seed yields the all-to-one table, which fails at beta=1/2.
  const auto res = solve_R(p, d, system, Rational(2), Rational(1, 2), 1,
                           SearchMode::exhaustive, 0);
  CHECK_FALSE(res.found);
  CHECK(res.seeds_examined == 1);
  CHECK_THROWS_AS(solve_R(p, d, system, Rational(2), Rational(1, 2), 0,
                          SearchMode::exhaustive, 0),
                  ValidationError);
}

TEST_CASE("seed search finds a passing seed and re-verifies it") {
  // The zero seed yields the all-to-one table, which fails; most spread
  // tables pass, so both search orders succeed within the budget.
  GraphParams p{2, 2, 1, 2, Rational(1, 4)};
  const auto d = greedy_design(p.table_bits(), default_design_t(p.table_bits()),
                               default_design_overlap(default_design_t(p.table_bits())));
  RelevantSystem system;
  system.n = 2;
  system.k = 2;
  system.bound = 4;
  system.sets = {set_of({0, 1, 2, 3})};
  system.provenance = {SetProvenance{0, Bits::from_string("00"), 1}};
  const Rational alpha(201, 100), beta(1, 2);
  {
    const auto zero = graph_from_seed(p, d, Bits(d.l));
    CHECK_FALSE(is_low_congesting(zero, system, alpha, beta).ok);
  }
  for (const auto mode : {SearchMode::exhaustive, SearchMode::sampled}) {
    const auto res = solve_R(p, d, system, alpha, beta, 65536, mode, 17);
    REQUIRE(res.found);
    const auto g = graph_from_seed(p, d, res.seed);
    CHECK(is_low_congesting(g, system, alpha, beta).ok);
    CHECK(res.seed.size() == d.l);
    if (mode == SearchMode::exhaustive) CHECK(res.seeds_examined > 1);
  }
  // Determinism of the sampled sequence.
  const auto a = solve_R(p, d, system, alpha, beta, 64, SearchMode::sampled, 17);
  const auto b = solve_R(p, d, system, alpha, beta, 64, SearchMode::sampled, 17);
  CHECK(a.found == b.found);
  CHECK(a.seed == b.seed);
  CHECK(a.seeds_examined == b.seeds_examined);
}

TEST_CASE("seed economy: the ground set is far smaller than the output") {
  GraphParams p{6, 3, 3, 3, Rational(1, 8)};  // r = 1536
  const auto d = greedy_design(p.table_bits(), default_design_t(p.table_bits()),
                               default_design_overlap(default_design_t(p.table_bits())));
  CHECK(d.sets.size() == 1536);
  CHECK(d.l < 1536);
  CHECK(max_pairwise_overlap(d) <= d.max_overlap);
}

TEST_SUITE_END();
