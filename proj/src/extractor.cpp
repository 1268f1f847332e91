#include "lcg/extractor.hpp"

#include <algorithm>

#include "lcg/rng.hpp"

namespace lcg {

DeviationReport deviation(const BipartiteGraph& g, std::span<const std::uint64_t> s) {
  if (s.empty()) throw DomainError("deviation: empty set");
  const auto indeg = g.indegree_table(s);
  const std::uint64_t mass = g.params().degree() * s.size();  // E(S, M)
  const std::uint64_t right = g.params().right_size();

  // |indeg/mass - 1/M| = |indeg*M - mass| / (mass*M); sum over y, halve.
  long long l1_num = 0;
  std::vector<std::uint64_t> worst;
  for (std::uint64_t y = 0; y < right; ++y) {
    const long long diff = static_cast<long long>(indeg[y] * right) -
                           static_cast<long long>(mass);
    l1_num += diff < 0 ? -diff : diff;
    if (diff > 0) worst.push_back(y);
  }
  DeviationReport report;
  report.set.assign(s.begin(), s.end());
  std::sort(report.set.begin(), report.set.end());
  report.deviation = Rational(l1_num, 2LL * static_cast<long long>(mass * right));
  report.worst_y = std::move(worst);
  return report;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t value = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // value * (n - r + i) / i stays integral at every step.
    if (value > cap) return cap + 1;
    value = value * (n - r + i) / i;
  }
  return std::min(value, cap + 1);
}

bool is_extractor_exhaustive(const BipartiteGraph& g, std::uint64_t set_size,
                             const Rational& eps, std::uint64_t budget) {
  const std::uint64_t left = g.params().left_size();
  if (set_size == 0 || set_size > left)
    throw DomainError("is_extractor_exhaustive: bad set size");
  if (binomial_capped(left, set_size, budget) > budget)
    throw BudgetError("is_extractor_exhaustive: enumeration budget exceeded; "
                      "use the sampled variant");

  std::vector<std::uint64_t> subset(set_size);
  for (std::uint64_t i = 0; i < set_size; ++i) subset[i] = i;
  while (true) {
    if (deviation(g, subset).deviation >= eps) return false;
    // Next combination in lexicographic order.
    std::uint64_t i = set_size;
    while (i > 0 && subset[i - 1] == left - set_size + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::uint64_t j = i; j < set_size; ++j) subset[j] = subset[j - 1] + 1;
  }
  return true;
}

SampledExtractorCheck is_extractor_sampled(const BipartiteGraph& g,
                                           std::uint64_t set_size,
                                           const Rational& eps,
                                           std::uint64_t trials,
                                           std::uint64_t rng_seed) {
  if (trials == 0) throw ValidationError("is_extractor_sampled: trials must be >= 1");
  const std::uint64_t left = g.params().left_size();
  if (set_size == 0 || set_size > left)
    throw DomainError("is_extractor_sampled: bad set size");

  SplitMix64 rng(rng_seed);
  SampledExtractorCheck result;
  result.verdict = true;
  result.worst_deviation = Rational(0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto subset = sample_sorted_subset(rng, left, set_size);
    const auto report = deviation(g, subset);
    if (report.deviation > result.worst_deviation) {
      result.worst_deviation = report.deviation;
      result.worst_set = subset;
    }
    if (report.deviation >= eps) result.verdict = false;
  }
  return result;
}

int suggested_degree(int n, int k, const Rational& eps, int c0) {
  if (n <= k) throw DomainError("suggested_degree: need n > k");
  if (eps <= Rational(0) || eps >= Rational(1))
    throw DomainError("suggested_degree: eps must lie in (0,1)");
  const Rational q = Rational(n - k) / (eps * eps);
  const int d = ceil_log2(q) + c0;
  if (d < 1) throw DomainError("suggested_degree: c0 drives d below 1");
  return d;
}

}  // namespace lcg
