#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcg/bitgraph.hpp"
#include "lcg/rational.hpp"
#include "lcg/toy_machine.hpp"

namespace lcg {

// Clot threshold parameters. K is the absolute relevant-set bound (not |S|),
// so the threshold alpha*D*K/M is fixed across subsets.
struct ClotSpec {
  Rational alpha;
  std::uint64_t bound = 0;  // K

  void validate() const {
    if (alpha <= Rational(1)) throw ValidationError("clot: alpha must exceed 1");
    if (bound == 0) throw ValidationError("clot: K must be >= 1");
  }

  Rational threshold(const GraphParams& p) const {
    return alpha * Rational(static_cast<long long>(p.degree() * bound),
                            static_cast<long long>(p.right_size()));
  }
};

struct CongestionReport {
  std::vector<std::uint64_t> clot;       // right vertices, indegree strictly above threshold
  std::vector<std::uint64_t> congested;  // left vertices with every edge inside the clot
  Rational threshold;
};

// Right vertices with indegree from s strictly greater than alpha*D*K/M.
std::vector<std::uint64_t> alpha_clot(const BipartiteGraph& g,
                                      std::span<const std::uint64_t> s,
                                      const ClotSpec& spec);

// Members of s all of whose D (multi-)edges land inside alpha_clot(g, s).
std::vector<std::uint64_t> congested_set(const BipartiteGraph& g,
                                         std::span<const std::uint64_t> s,
                                         const ClotSpec& spec);

// Members of `members` all of whose edges land inside the clot computed for
// `clot_base` (the subset-heredity helper: heredity w.r.t. the base's clot).
std::vector<std::uint64_t> congested_set_against(const BipartiteGraph& g,
                                                 std::span<const std::uint64_t> members,
                                                 std::span<const std::uint64_t> clot_base,
                                                 const ClotSpec& spec);

CongestionReport congestion_report(const BipartiteGraph& g,
                                   std::span<const std::uint64_t> s,
                                   const ClotSpec& spec);

struct LowCongestingResult {
  bool ok = false;
  std::optional<std::size_t> failing_index;  // first failing set, system order
};

// True iff every set S in the system has strictly fewer than beta*K
// alpha-congested vertices, with K the system's bound.
LowCongestingResult is_low_congesting(const BipartiteGraph& g,
                                      const RelevantSystem& system,
                                      const Rational& alpha, const Rational& beta);

struct PeelTrace {
  std::vector<std::vector<std::uint64_t>> levels;  // T0 = s, T_{i+1} = congested(T_i)
  bool terminated = false;                         // last level empty (vs capped)
};

// Iterates congested_set with the same spec; max_iter caps the number of
// recorded levels. Hitting the cap is data, not an error.
PeelTrace peel(const BipartiteGraph& g, std::span<const std::uint64_t> s,
               const ClotSpec& spec, std::uint64_t max_iter);

// Per-set form of the clot counting bound: with K = 2^(g.params.k) and
// |s| = K exactly, |congested| * (alpha - 1) <= alpha * eps_S * K where
// eps_S is the attained deviation of s. Non-strict because eps_S is the
// attained supremum rather than a strict upper bound.
bool check_lemma3(const BipartiteGraph& g, std::span<const std::uint64_t> s,
                  const Rational& alpha);

}  // namespace lcg
