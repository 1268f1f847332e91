#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcg/bitgraph.hpp"
#include "lcg/rational.hpp"

namespace lcg {

// Worst-case deviation of the edge distribution induced by S from uniform,
// together with the right subset attaining it.
struct DeviationReport {
  std::vector<std::uint64_t> set;
  Rational deviation;
  std::vector<std::uint64_t> worst_y;
};

// Closed form: the maximizing Y is the set of right vertices whose edge
// fraction exceeds 1/M, and the maximum equals the total-variation distance
// (1/2) * sum_y |indeg(y)/(D|S|) - 1/M|.
DeviationReport deviation(const BipartiteGraph& g, std::span<const std::uint64_t> s);

// True iff every left subset of size exactly `set_size` deviates by less
// than eps. Refuses when C(N, set_size) exceeds `budget`.
bool is_extractor_exhaustive(const BipartiteGraph& g, std::uint64_t set_size,
                             const Rational& eps,
                             std::uint64_t budget = 2'000'000);

struct SampledExtractorCheck {
  bool verdict = false;  // one-sided: false is conclusive, true is evidence
  Rational worst_deviation;
  std::vector<std::uint64_t> worst_set;
};

SampledExtractorCheck is_extractor_sampled(const BipartiteGraph& g,
                                           std::uint64_t set_size,
                                           const Rational& eps,
                                           std::uint64_t trials,
                                           std::uint64_t rng_seed);

// ceil(log2(n-k) + 2*log2(1/eps)) + c0, computed exactly as
// ceil(log2((n-k)/eps^2)) + c0. Requires n > k and 0 < eps < 1.
int suggested_degree(int n, int k, const Rational& eps, int c0);

// C(n, r) with saturation at `cap` (enumeration guard helper).
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap);

}  // namespace lcg
