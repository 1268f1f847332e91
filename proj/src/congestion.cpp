#include "lcg/congestion.hpp"

#include <algorithm>

#include "lcg/extractor.hpp"

namespace lcg {
namespace {

// Dense clot membership; comparison is exact: indeg > alpha*D*K/M iff
// indeg * M * alpha_den > alpha_num * D * K.
std::vector<bool> clot_mask(const BipartiteGraph& g,
                            std::span<const std::uint64_t> s,
                            const ClotSpec& spec) {
  spec.validate();
  const auto indeg = g.indegree_table(s);
  const Rational threshold = spec.threshold(g.params());
  std::vector<bool> mask(indeg.size(), false);
  for (std::uint64_t y = 0; y < indeg.size(); ++y)
    mask[y] = Rational(static_cast<long long>(indeg[y])) > threshold;
  return mask;
}

std::vector<std::uint64_t> members_inside(const BipartiteGraph& g,
                                          std::span<const std::uint64_t> members,
                                          const std::vector<bool>& clot) {
  const std::uint64_t deg = g.params().degree();
  std::vector<std::uint64_t> out;
  for (std::uint64_t x : members) {
    bool all_in = true;
    for (std::uint64_t j = 0; j < deg && all_in; ++j)
      all_in = clot[g.neighbor(x, j)];
    if (all_in) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> alpha_clot(const BipartiteGraph& g,
                                      std::span<const std::uint64_t> s,
                                      const ClotSpec& spec) {
  const auto mask = clot_mask(g, s, spec);
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < mask.size(); ++y)
    if (mask[y]) out.push_back(y);
  return out;
}

std::vector<std::uint64_t> congested_set(const BipartiteGraph& g,
                                         std::span<const std::uint64_t> s,
                                         const ClotSpec& spec) {
  return members_inside(g, s, clot_mask(g, s, spec));
}

std::vector<std::uint64_t> congested_set_against(const BipartiteGraph& g,
                                                 std::span<const std::uint64_t> members,
                                                 std::span<const std::uint64_t> clot_base,
                                                 const ClotSpec& spec) {
  return members_inside(g, members, clot_mask(g, clot_base, spec));
}

CongestionReport congestion_report(const BipartiteGraph& g,
                                   std::span<const std::uint64_t> s,
                                   const ClotSpec& spec) {
  CongestionReport report;
  const auto mask = clot_mask(g, s, spec);
  for (std::uint64_t y = 0; y < mask.size(); ++y)
    if (mask[y]) report.clot.push_back(y);
  report.congested = members_inside(g, s, mask);
  report.threshold = spec.threshold(g.params());
  return report;
}

LowCongestingResult is_low_congesting(const BipartiteGraph& g,
                                      const RelevantSystem& system,
                                      const Rational& alpha, const Rational& beta) {
  system.validate();
  const ClotSpec spec{alpha, system.bound};
  spec.validate();
  const Rational allowed = beta * Rational(static_cast<long long>(system.bound));
  for (std::size_t i = 0; i < system.sets.size(); ++i) {
    const auto congested = congested_set(g, system.sets[i], spec);
    if (Rational(static_cast<long long>(congested.size())) >= allowed)
      return LowCongestingResult{false, i};
  }
  return LowCongestingResult{true, std::nullopt};
}

PeelTrace peel(const BipartiteGraph& g, std::span<const std::uint64_t> s,
               const ClotSpec& spec, std::uint64_t max_iter) {
  if (max_iter < 1) throw ValidationError("peel: max_iter must be >= 1");
  spec.validate();
  PeelTrace trace;
  trace.levels.emplace_back(s.begin(), s.end());
  while (!trace.levels.back().empty() && trace.levels.size() < max_iter)
    trace.levels.push_back(congested_set(g, trace.levels.back(), spec));
  trace.terminated = trace.levels.back().empty();
  return trace;
}

bool check_lemma3(const BipartiteGraph& g, std::span<const std::uint64_t> s,
                  const Rational& alpha) {
  if (alpha <= Rational(1)) throw DomainError("check_lemma3: alpha must exceed 1");
  const std::uint64_t bound = g.params().set_bound();
  if (s.size() != bound)
    throw DomainError("check_lemma3: set size must equal 2^k");
  const Rational eps_s = deviation(g, s).deviation;
  const auto congested = congested_set(g, s, ClotSpec{alpha, bound});
  const Rational lhs = Rational(static_cast<long long>(congested.size())) * (alpha - 1);
  const Rational rhs = alpha * eps_s * Rational(static_cast<long long>(bound));
  return lhs <= rhs;
}

}  // namespace lcg
