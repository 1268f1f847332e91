#include "lcg/codec.hpp"

#include <algorithm>
#include <cstdio>

#include "lcg/congestion.hpp"
#include "lcg/extractor.hpp"

namespace lcg {

std::uint64_t CodecConfig::level_cap() const {
  // Smallest L with (1/(2.01 eps))^L >= K_0, plus one.
  const Rational q = Rational(1) / (alpha() * eps);
  const Rational target(static_cast<long long>(set_bound()));
  Rational power(1);
  std::uint64_t levels = 0;
  while (power < target) {
    power *= q;
    ++levels;
  }
  return levels + 1;
}

void CodecConfig::validate() const {
  if (n < 1 || n > 40) throw ValidationError("codec: bad n");
  if (k < 1 || k > n) throw ValidationError("codec: need 1 <= k <= n");
  if (s < 1) throw ValidationError("codec: need s >= 1");
  if (eps <= Rational(0) || eps >= Rational(1))
    throw ValidationError("codec: eps must lie in (0,1)");
  if (alpha() * eps >= Rational(1))
    throw ValidationError("codec: need 2.01 * eps < 1");
  if (budget < 1) throw ValidationError("codec: budget must be >= 1");
  if (max_levels != 0 && max_levels < level_cap())
    throw ValidationError("codec: max_levels below the contraction bound");
}

namespace {

std::uint64_t effective_max_levels(const CodecConfig& config) {
  return config.max_levels == 0 ? config.level_cap() : config.max_levels;
}

RelevantSystem derive_next_system(const RelevantSystem& current,
                                  const BipartiteGraph& graph,
                                  const Rational& alpha,
                                  std::uint64_t next_bound) {
  RelevantSystem next;
  next.n = current.n;
  next.k = current.k;
  next.bound = next_bound;
  next.provenance = current.provenance;
  const ClotSpec spec{alpha, current.bound};
  for (const auto& s : current.sets) {
    next.sets.push_back(congested_set(graph, s, spec));
    // The low-congesting property promises strictly fewer than beta*K_i
    // congested vertices, and K_{i+1} = ceil(beta*K_i).
    if (next.sets.back().size() >= next_bound)
      throw PlanError("plan: derived set reaches the contracted bound");
  }
  try {
    next.validate();
  } catch (const ValidationError& e) {
    throw PlanError(std::string("plan: derived system violates its bound: ") +
                    e.what());
  }
  return next;
}

}  // namespace

LevelPlan plan_levels(const CodecConfig& config, const RelevantSystem& system) {
  config.validate();
  system.validate();
  if (system.bound != config.set_bound())
    throw ValidationError("plan: system bound differs from 2^k");

  const std::uint64_t cap = effective_max_levels(config);
  const Rational alpha = config.alpha();
  const Rational beta = alpha * config.eps;

  LevelPlan plan;
  plan.systems.push_back(system);
  while (plan.systems.back().max_set_size() > 1) {
    const std::uint64_t level = plan.levels.size();
    if (level >= cap)
      throw PlanError("plan: level cap " + std::to_string(cap) +
                      " reached with nontrivial sets");
    const RelevantSystem& current = plan.systems.back();
    const std::uint64_t bound = current.bound;

    GraphParams params;
    params.n = config.n;
    params.m = ceil_log2_u64(bound);
    params.k = params.m;
    params.eps = config.eps;
    try {
      params.d = suggested_degree(config.n, params.m, config.eps, config.c0);
      params.validate();
    } catch (const ValidationError& e) {
      throw PlanError("plan: level " + std::to_string(level) +
                      ": invalid graph parameters: " + e.what());
    }

    const std::uint64_t r = params.table_bits();
    const std::uint32_t t =
        config.design_t != 0 ? config.design_t : default_design_t(r);
    const std::uint32_t overlap = config.design_overlap != 0
                                      ? config.design_overlap
                                      : default_design_overlap(t);
    Design design = greedy_design(r, t, overlap);

    const SeedSearchResult search =
        solve_R(params, design, current, alpha, beta, config.budget,
                config.mode, config.rng_seed + level);
    if (!search.found)
      throw PlanError("plan: level " + std::to_string(level) +
                      ": no low-congesting seed within budget " +
                      std::to_string(config.budget));

    BipartiteGraph graph = graph_from_seed(params, design, search.seed);
    const std::uint64_t next_bound = ceil_to_u64(beta * Rational(static_cast<long long>(bound)));
    if (next_bound >= bound)
      throw PlanError("plan: level " + std::to_string(level) +
                      ": parameters do not contract");
    plan.systems.push_back(derive_next_system(current, graph, alpha, next_bound));
    plan.levels.push_back(CodecLevel{bound, params, std::move(design),
                                     search.seed, std::move(graph)});
  }
  return plan;
}

Codec::Codec(CodecConfig config, const std::vector<Bits>& corpus)
    : config_(std::move(config)) {
  config_.validate();
  RelevantSystem system = build_system(corpus, config_.k, config_.s, config_.n);
  plan_ = plan_levels(config_, system);
}

Codec::Codec(CodecConfig config, RelevantSystem system)
    : config_(std::move(config)) {
  config_.validate();
  plan_ = plan_levels(config_, system);
}

Codec::Codec(CodecConfig config, RelevantSystem system, LevelPlan plan)
    : config_(std::move(config)), plan_(std::move(plan)) {
  config_.validate();
  system.validate();
  if (plan_.systems.empty())
    throw ValidationError("codec: plan must carry at least the base system");
}

std::size_t Codec::locate_set(const Bits& b) const {
  const auto& prov = plan_.systems.front().provenance;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < prov.size(); ++i)
    if (prov[i].condition == b && prov[i].space <= config_.s) found = i;
  if (!found)
    throw DomainError("a not describable: no relevant set for this condition");
  return *found;
}

Encoding Codec::encode(const Bits& a, const Bits& b) const {
  if (a.size() != static_cast<std::size_t>(config_.n))
    throw ValidationError("encode: a must have exactly n bits");
  const std::size_t set_index = locate_set(b);
  const std::uint64_t a_idx = a.to_uint();
  {
    const auto& s0 = plan_.systems.front().sets[set_index];
    if (!std::binary_search(s0.begin(), s0.end(), a_idx))
      throw DomainError("a not describable: not in the relevant set");
  }

  const Rational alpha = config_.alpha();
  for (std::uint64_t level = 0;; ++level) {
    if (level >= plan_.systems.size())
      throw PlanError("encode: descent exceeded the plan");
    const auto& s = plan_.systems[level].sets[set_index];
    if (s.size() <= 1) {
      Encoding enc;
      enc.level = level;
      enc.set_index = set_index;
      return enc;  // degenerate: p empty, ordinal 0
    }
    const CodecLevel& lvl = plan_.levels.at(level);
    const auto clot =
        alpha_clot(lvl.graph, s, ClotSpec{alpha, lvl.bound});
    std::vector<bool> in_clot(lvl.params.right_size(), false);
    for (std::uint64_t y : clot) in_clot[y] = true;

    std::optional<std::uint64_t> edge;
    std::uint64_t p_val = 0;
    for (std::uint64_t j = 0; j < lvl.params.degree(); ++j) {
      const std::uint64_t y = lvl.graph.neighbor(a_idx, j);
      if (!in_clot[y]) {
        edge = j;
        p_val = y;
        break;
      }
    }
    if (!edge) continue;  // a is congested at this level; descend

    Encoding enc;
    enc.p = Bits::from_uint(p_val, static_cast<std::size_t>(lvl.params.m));
    enc.level = level;
    enc.set_index = set_index;
    enc.edge_index = *edge;
    std::uint64_t rank = 0;
    for (std::uint64_t x : s) {
      bool hits = false;
      for (std::uint64_t j = 0; j < lvl.params.degree() && !hits; ++j)
        hits = lvl.graph.neighbor(x, j) == p_val;
      if (!hits) continue;
      if (x == a_idx) {
        enc.ordinal = rank;
        return enc;
      }
      ++rank;
    }
    throw PlanError("encode: fingerprint lost its own preimage");
  }
}

std::vector<std::uint64_t> Codec::preimage_candidates(const Encoding& enc) const {
  if (enc.degenerate())
    throw DomainError("preimage_candidates: degenerate encoding");
  if (enc.level >= plan_.levels.size())
    throw DecodeError("decode: level beyond the plan");
  const CodecLevel& lvl = plan_.levels[enc.level];
  if (enc.p.size() != static_cast<std::size_t>(lvl.params.m))
    throw DecodeError("decode: fingerprint width differs from the level");
  const std::uint64_t p_val = enc.p.to_uint();
  const auto& s = plan_.systems[enc.level].sets[enc.set_index];
  std::vector<std::uint64_t> out;
  for (std::uint64_t x : s) {
    for (std::uint64_t j = 0; j < lvl.params.degree(); ++j) {
      if (lvl.graph.neighbor(x, j) == p_val) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

Bits Codec::decode(const Encoding& enc, const Bits& b) const {
  if (enc.set_index >= plan_.systems.front().sets.size())
    throw DecodeError("decode: set index out of range");
  const auto& prov = plan_.systems.front().provenance[enc.set_index];
  if (prov.condition != b || prov.space > config_.s)
    throw DecodeError("decode: advice does not match the condition");
  if (enc.level >= plan_.systems.size())
    throw DecodeError("decode: level beyond the plan");

  const auto& s = plan_.systems[enc.level].sets[enc.set_index];
  if (enc.degenerate()) {
    if (s.size() != 1)
      throw DecodeError("decode: degenerate advice on a non-singleton set");
    return Bits::from_uint(s.front(), static_cast<std::size_t>(config_.n));
  }
  const auto candidates = preimage_candidates(enc);
  if (enc.ordinal >= candidates.size())
    throw DecodeError("decode: ordinal beyond the preimage list");
  return Bits::from_uint(candidates[enc.ordinal],
                         static_cast<std::size_t>(config_.n));
}

AdviceBits Codec::advice_bits(const Encoding& enc) const {
  AdviceBits out;
  out.level_bits = ceil_log2_u64(effective_max_levels(config_) + 1);
  const std::uint64_t sets = plan_.systems.front().sets.size();
  out.set_index_bits = sets == 0 ? 0 : ceil_log2_u64(sets);
  if (!enc.degenerate() && !plan_.levels.empty()) {
    std::uint64_t d_max = 0;
    std::uint64_t deg_max = 1;
    for (const auto& lvl : plan_.levels) {
      d_max = std::max<std::uint64_t>(d_max, lvl.params.d);
      deg_max = std::max(deg_max, lvl.params.degree());
    }
    const std::uint64_t preimages =
        ceil_to_u64(config_.alpha() * Rational(static_cast<long long>(deg_max)));
    out.ordinal_bits = ceil_log2_u64(preimages + 1);
    out.edge_bits = d_max;
  }
  out.total = out.level_bits + out.set_index_bits + out.ordinal_bits + out.edge_bits;
  return out;
}

std::string plan_cache_key(const CodecConfig& config, const std::vector<Bits>& corpus) {
  // FNV-1a over a canonical rendering; stable across platforms.
  std::string text = std::to_string(config.n) + "|" + std::to_string(config.k) +
                     "|" + std::to_string(config.s) + "|" +
                     format_rational(config.eps) + "|" +
                     std::to_string(config.c0) + "|" +
                     std::to_string(config.design_t) + "|" +
                     std::to_string(config.design_overlap) + "|" +
                     (config.mode == SearchMode::exhaustive ? "e" : "s") + "|" +
                     std::to_string(config.budget) + "|" +
                     std::to_string(config.rng_seed) + "|" +
                     std::to_string(config.max_levels);
  for (const auto& b : corpus)
    text += "|" + b.to_hex() + ":" + std::to_string(b.size());
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace lcg
