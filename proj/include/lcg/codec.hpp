#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcg/bitgraph.hpp"
#include "lcg/bits.hpp"
#include "lcg/nw_generator.hpp"
#include "lcg/toy_machine.hpp"

namespace lcg {

// Configuration for the fingerprint codec. Everything the decoder needs to
// rebuild the per-level graphs is here or in the condition corpus; nothing
// depends on the encoded string.
struct CodecConfig {
  int n = 0;
  int k = 0;                 // K_0 = 2^k; fingerprints have at most k bits
  std::uint64_t s = 0;       // machine space bound (also the system's s_bar)
  Rational eps;

  int c0 = 1;                // additive constant of the degree rule
  std::uint32_t design_t = 0;        // 0 = ceil(log2 r)
  std::uint32_t design_overlap = 0;  // 0 = max(1, ceil(log2 t))
  SearchMode mode = SearchMode::sampled;
  std::uint64_t budget = 256;
  std::uint64_t rng_seed = 1;        // level i searches with rng_seed + i
  std::uint64_t max_levels = 0;      // 0 = ceil(log_{1/(2.01 eps)} K_0) + 1

  Rational alpha() const { return Rational(201, 100); }
  std::uint64_t set_bound() const { return std::uint64_t{1} << k; }
  // ceil(log_{1/(2.01 eps)} K_0) + 1.
  std::uint64_t level_cap() const;
  void validate() const;
};

struct CodecLevel {
  std::uint64_t bound = 0;  // K_i
  GraphParams params;       // (n, m_i = ceil(log2 K_i), d_i, k_i = m_i, eps)
  std::optional<Design> design;
  Bits seed;
  BipartiteGraph graph;
};

// Levels 0..L-1 carry graphs; systems has one extra trailing entry, and the
// last system's sets all have size <= 1.
struct LevelPlan {
  std::vector<CodecLevel> levels;
  std::vector<RelevantSystem> systems;
};

// Runs the seed search per level and derives the congested-set systems until
// every set is trivial. Seed-not-found and contraction violations raise
// PlanError with the level and budget.
LevelPlan plan_levels(const CodecConfig& config, const RelevantSystem& system);

// Fingerprint plus the advice needed to decode it: the level, the index of
// the generating (condition, space) pair in the system, the preimage
// ordinal, and the edge index used at encode time (complexity accounting
// only; the decoder must not match on it).
struct Encoding {
  Bits p;                        // empty iff degenerate (singleton set)
  std::uint64_t level = 0;
  std::uint64_t set_index = 0;
  std::uint64_t ordinal = 0;
  std::uint64_t edge_index = 0;

  bool degenerate() const { return p.empty(); }
};

struct AdviceBits {
  std::uint64_t level_bits = 0;
  std::uint64_t set_index_bits = 0;
  std::uint64_t ordinal_bits = 0;
  std::uint64_t edge_bits = 0;
  std::uint64_t total = 0;
};

class Codec {
public:
  // Builds the relevant system from the condition corpus via the toy
  // machine, then plans. The decoder must be constructed with the same
  // config and corpus to re-derive the identical plan.
  Codec(CodecConfig config, const std::vector<Bits>& corpus);

  // Injects a pre-built system (provenance supplies the per-condition keys).
  Codec(CodecConfig config, RelevantSystem system);

  // Fully injected plan (plan caches, hand-crafted tests).
  Codec(CodecConfig config, RelevantSystem system, LevelPlan plan);

  const CodecConfig& config() const { return config_; }
  const LevelPlan& plan() const { return plan_; }

  // a must lie in the relevant set of b at the config's space bound.
  Encoding encode(const Bits& a, const Bits& b) const;

  // Never reads a: the fingerprint, advice, condition and config suffice.
  Bits decode(const Encoding& encoding, const Bits& b) const;

  AdviceBits advice_bits(const Encoding& encoding) const;

  // Decoder candidates for a non-degenerate encoding (preimage-bound checks).
  std::vector<std::uint64_t> preimage_candidates(const Encoding& encoding) const;

private:
  std::size_t locate_set(const Bits& b) const;

  CodecConfig config_;
  LevelPlan plan_;
};

// Cache key for a planned codec: stable content hash of (config, corpus).
std::string plan_cache_key(const CodecConfig& config, const std::vector<Bits>& corpus);

}  // namespace lcg
