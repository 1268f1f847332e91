#pragma once

#include <cstdint>
#include <vector>

#include "lcg/bitgraph.hpp"
#include "lcg/bits.hpp"
#include "lcg/congestion.hpp"
#include "lcg/toy_machine.hpp"

namespace lcg {

// A family of r size-t subsets of [0, l) with bounded pairwise overlap. The
// generator's output bit i is the parity of the seed restricted to sets[i].
struct Design {
  std::uint32_t l = 0;
  std::uint32_t t = 0;
  std::uint32_t max_overlap = 0;
  std::vector<std::vector<std::uint32_t>> sets;

  void validate() const;  // shape only; overlaps via max_pairwise_overlap
};

std::uint32_t max_pairwise_overlap(const Design& design);

// Deterministic greedy: for i = 0..r-1 pick the lexicographically first
// t-subset of the current ground set meeting the overlap bound against all
// previous sets, growing the ground set only when no such subset exists.
Design greedy_design(std::uint64_t r, std::uint32_t t, std::uint32_t max_overlap);

// Default knobs: t = ceil(log2 r), max_overlap = max(1, ceil(log2 t)).
std::uint32_t default_design_t(std::uint64_t r);
std::uint32_t default_design_overlap(std::uint32_t t);

// Output bit i = XOR of the seed bits indexed by design.sets[i].
Bits nw_output(const Design& design, const Bits& seed);

// Wraps nw_output as a graph table; design must have r = N*D*m.
BipartiteGraph graph_from_seed(const GraphParams& params, const Design& design,
                               const Bits& seed);

enum class SearchMode { exhaustive, sampled };

struct SeedSearchResult {
  bool found = false;
  Bits seed;
  std::uint64_t seeds_examined = 0;
  SearchMode mode = SearchMode::exhaustive;
};

// Finds a seed whose graph is low-congesting for the system. Exhaustive mode
// walks seeds as l-bit integers 0,1,2,...; sampled mode draws l-bit strings
// from the SplitMix64 stream seeded with rng_seed. The first passing seed in
// sequence order is returned (and the predicate re-checked); exhausting the
// budget yields found = false, which is data rather than an error.
SeedSearchResult solve_R(const GraphParams& params, const Design& design,
                         const RelevantSystem& system, const Rational& alpha,
                         const Rational& beta, std::uint64_t budget,
                         SearchMode mode, std::uint64_t rng_seed);

}  // namespace lcg
