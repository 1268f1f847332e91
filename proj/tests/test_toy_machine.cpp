#include <doctest.h>

#include <algorithm>

#include "lcg/toy_machine.hpp"
#include "oracles.hpp"

using namespace lcg;

namespace {

Bits bits(const char* s) { return Bits::from_string(s); }

std::vector<Bits> all_conditions(int len) {
  std::vector<Bits> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v)
    out.push_back(Bits::from_uint(v, len));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("toy_machine");

TEST_CASE("literal programs copy their payload within the space budget") {
  CHECK(*run_toy(bits("000101"), bits("1"), 4) == bits("0101"));
  CHECK_FALSE(run_toy(bits("000101"), bits("1"), 3).has_value());  // cost 4 > 3
  CHECK(*run_toy(bits("00"), bits("1"), 0) == Bits());
}

TEST_CASE("prefix programs emit the cyclic extension of the condition") {
  CHECK(*run_toy(bits("10100"), bits("0101"), 6) == bits("0101"));  // l=4, cost 6
  CHECK_FALSE(run_toy(bits("10100"), bits("0101"), 5).has_value());
  CHECK(*run_toy(bits("10110"), bits("01"), 10) == bits("010101"));  // l=6
  CHECK(*run_toy(bits("10"), bits("0101"), 2) == Bits());            // l=0
  CHECK(*run_toy(bits("1011"), bits(""), 10) == bits("000"));        // empty b
}

TEST_CASE("xor-with-condition and reversal semantics") {
  CHECK(*run_toy(bits("011100"), bits("10"), 5) == bits("0110"));  // w ^ 1010
  CHECK_FALSE(run_toy(bits("011100"), bits("10"), 4).has_value()); // cost 5
  CHECK(*run_toy(bits("11011"), bits(""), 6) == bits("110"));      // reverse, cost 6
  CHECK_FALSE(run_toy(bits("11011"), bits(""), 5).has_value());
}

TEST_CASE("programs shorter than the opcode are malformed") {
  CHECK_THROWS_AS(run_toy(bits("1"), bits("0"), 8), ValidationError);
  CHECK_THROWS_AS(run_toy(Bits(), bits("0"), 8), ValidationError);
}

TEST_CASE("bounded describability follows the program enumeration") {
  CHECK(ks_bounded(bits("0101"), bits("0101"), 6, 6));
  CHECK_FALSE(ks_bounded(bits("0101"), bits("0101"), 6, 5));
  CHECK_FALSE(ks_bounded(bits("0101"), bits("0101"), 2, 64));
}

TEST_CASE("relevant sets at the spec's worked parameters") {
  CHECK(relevant_set(bits("0101"), 6, 6, 4) == std::vector<std::uint64_t>{5});
  CHECK(relevant_set(bits("0101"), 6, 5, 4).empty());
  std::vector<std::uint64_t> all16(16);
  for (std::uint64_t i = 0; i < 16; ++i) all16[i] = i;
  CHECK(relevant_set(bits("0101"), 8, 6, 4) == all16);
  CHECK(relevant_set(bits("0101"), 8, 4, 4) == all16);  // literals cost 4
}

TEST_CASE("pivotal limits at the spec's worked parameters") {
  CHECK(pivotal_limits(bits("0101"), 6, 16, 4).limits ==
        std::vector<std::uint64_t>{6});
  CHECK(pivotal_limits(bits("0101"), 8, 16, 4).limits ==
        std::vector<std::uint64_t>{4});
  CHECK(pivotal_limits(bits("0101"), 2, 16, 4).limits.empty());
  CHECK_THROWS_AS(pivotal_limits(bits("0101"), 6, 0, 4), ValidationError);
}

TEST_CASE("main implementation agrees with the naive enumerator") {
  for (const char* b : {"0101", "1100", "0", "111", ""}) {
    for (int k : {2, 4, 5, 6, 7, 8}) {
      for (std::uint64_t s : {0ULL, 3ULL, 5ULL, 6ULL, 8ULL, 16ULL}) {
        const auto main_set = oracle::to_strings(relevant_set(bits(b), k, s, 4), 4);
        CHECK(main_set == oracle::naive_relevant_set(b, k, s, 4));
      }
      CHECK(pivotal_limits(bits(b), k, 16, 4).limits ==
            oracle::naive_pivotal_limits(b, k, 16, 4));
    }
  }
}

TEST_CASE("relevant sets grow with the space bound and with k") {
  for (const auto& b : all_conditions(4)) {
    for (int k = 2; k <= 8; ++k) {
      std::vector<std::uint64_t> prev;
      for (std::uint64_t s = 0; s <= 16; ++s) {
        const auto cur = relevant_set(b, k, s, 4);
        CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        prev = cur;
      }
      const auto narrow = relevant_set(b, k, 16, 4);
      const auto wide = relevant_set(b, k + 1, 16, 4);
      CHECK(std::includes(wide.begin(), wide.end(), narrow.begin(), narrow.end()));
    }
  }
}

TEST_CASE("pivotal limit count stays below 2^k") {
  for (const auto& b : all_conditions(4))
    for (int k = 2; k <= 8; ++k)
      CHECK(pivotal_limits(b, k, 16, 4).limits.size() <
            (std::uint64_t{1} << k));
}

TEST_CASE("build_system collects pivotal sets per condition in order") {
  const auto system = build_system({bits("0101")}, 6, 16, 4);
  REQUIRE(system.sets.size() == 1);
  CHECK(system.sets[0] == std::vector<std::uint64_t>{5});
  CHECK(system.provenance[0].space == 6);
  CHECK(system.provenance[0].condition_index == 0);
  CHECK(system.bound == 64);

  CHECK_THROWS_AS(build_system({}, 6, 16, 4), ValidationError);

  const auto multi = build_system(all_conditions(4), 8, 16, 4);
  CHECK(multi.sets.size() == 16);  // one pivot per condition at k=8
  for (const auto& s : multi.sets) CHECK(s.size() < multi.bound);
}

TEST_CASE("system size bound scales with conditions times 2^k") {
  const auto system = build_system(all_conditions(3), 7, 16, 3);
  CHECK(system.sets.size() <= 8 * (std::uint64_t{1} << 7));
  for (const auto& s : system.sets) CHECK(s.size() < system.bound);
}

TEST_SUITE_END();
