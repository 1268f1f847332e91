#include "lcg/nw_generator.hpp"

#include <algorithm>

#include "lcg/rng.hpp"

namespace lcg {

void Design::validate() const {
  if (max_overlap < 1 || max_overlap > t)
    throw ValidationError("design: need 1 <= max_overlap <= t");
  for (const auto& s : sets) {
    if (s.size() != t) throw ValidationError("design: set size differs from t");
    if (std::adjacent_find(s.begin(), s.end(),
                           [](auto a, auto b) { return a >= b; }) != s.end())
      throw ValidationError("design: sets must be strictly ascending");
    if (!s.empty() && s.back() >= l)
      throw ValidationError("design: element outside the ground set");
  }
}

std::uint32_t max_pairwise_overlap(const Design& design) {
  // Sparse counting via an element -> set-ids index; O(sum of index sizes).
  std::vector<std::vector<std::uint32_t>> index(design.l);
  std::vector<std::uint32_t> counts(design.sets.size(), 0);
  std::uint32_t best = 0;
  for (std::uint32_t i = 0; i < design.sets.size(); ++i) {
    std::vector<std::uint32_t> touched;
    for (std::uint32_t e : design.sets[i]) {
      for (std::uint32_t id : index[e]) {
        if (counts[id]++ == 0) touched.push_back(id);
      }
    }
    for (std::uint32_t id : touched) {
      best = std::max(best, counts[id]);
      counts[id] = 0;
    }
    for (std::uint32_t e : design.sets[i]) index[e].push_back(i);
  }
  return best;
}

namespace {

// Lexicographically-first valid t-subset enumeration. Overlap with every
// previous set is tracked incrementally through an element -> set-ids index;
// elements of any set whose overlap already equals the bound are skipped in
// O(1) via a per-element forbid count.
//
// A candidate that conflicts stays in conflict forever (sets are only ever
// added), so within a fixed ground set the lex cursor never rewinds: dead
// regions of the subset order are scanned exactly once per growth era
// instead of once per requested set. After yielding X, every prefix of X
// longer than the overlap bound is dead against X itself, so the cursor
// resumes from the sibling at depth max_overlap.
class GreedyBuilder {
public:
  GreedyBuilder(std::uint32_t t, std::uint32_t max_overlap)
      : t_(t), overlap_(max_overlap) {}

  std::vector<std::vector<std::uint32_t>> build(std::uint64_t r) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(r);
    if (overlap_ == t_) {
      // The overlap constraint is vacuous; the lex-first subset repeats.
      std::vector<std::uint32_t> base(t_);
      for (std::uint32_t i = 0; i < t_; ++i) base[i] = i;
      universe_ = t_;
      out.assign(r, base);
      return out;
    }
    for (std::uint64_t i = 0; i < r; ++i) {
      out.push_back(next_set());
      commit(out.back());
    }
    return out;
  }

  std::uint32_t universe() const { return universe_; }

private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  std::vector<std::uint32_t> next_set() {
    std::uint32_t cand = 0;
    if (resume_) {
      // Unwind the yielded subset to its longest live prefix and continue
      // with the next sibling there.
      std::uint32_t popped = 0;
      while (partial_.size() > overlap_) {
        popped = partial_.back();
        remove(popped);
      }
      cand = popped + 1;
      resume_ = false;
    }
    if (advance(cand)) {
      resume_ = true;
      return partial_;
    }
    // The current ground set is exhausted: everything over [0, universe_)
    // is dead for good. Grow. Fresh elements conflict with nothing, so the
    // next set is the lex-first valid partial of size t-g followed by the
    // g new elements.
    dead_universe_ = universe_;
    for (std::uint32_t g = 1; g <= t_; ++g) {
      if (g < t_ && !ffp(0, t_ - g)) continue;
      std::vector<std::uint32_t> set = partial_;
      while (!partial_.empty()) remove(partial_.back());
      for (std::uint32_t f = 0; f < g; ++f) set.push_back(universe_ + f);
      universe_ += g;
      return set;  // cursor restarts over the grown ground set
    }
    throw Error("greedy design: unreachable");
  }

  // Resumes the lex enumeration of valid t-subsets, extending the current
  // partial with candidates >= cand. True when partial_ reaches size t;
  // false when the order is exhausted (partial_ left empty). Candidates
  // lying entirely inside the proven-dead prefix of the ground set are
  // skipped: their last element must reach dead_universe_.
  bool advance(std::uint32_t cand) {
    while (true) {
      const std::uint32_t q = static_cast<std::uint32_t>(partial_.size());
      if (q == t_) return true;
      const std::uint32_t need = t_ - q;
      std::uint32_t e = kNone;
      if (need == 1 && fresh_in_partial_ == 0 && cand < dead_universe_)
        cand = dead_universe_;
      if (count_allowed_from(cand) >= need &&
          (fresh_in_partial_ > 0 || count_allowed_from(dead_universe_) >= 1))
        e = next_allowed(cand);
      if (e != kNone && e + need <= universe_) {
        add(e);
        cand = e + 1;
        continue;
      }
      if (partial_.empty()) return false;
      const std::uint32_t popped = partial_.back();
      remove(popped);
      cand = popped + 1;
    }
  }

  // Leaves the lex-first valid partial of the given size in partial_.
  // Partials need no fresh element: their completion supplies it.
  bool ffp(std::uint32_t next_min, std::uint32_t target) {
    const std::uint32_t q = static_cast<std::uint32_t>(partial_.size());
    if (q == target) return true;
    const std::uint32_t need = target - q;
    std::uint32_t admissible = count_allowed_from(next_min);
    for (std::uint32_t e = next_allowed(next_min);
         e != kNone && e + need <= universe_; e = next_allowed(e + 1)) {
      if (admissible < need) return false;
      --admissible;
      add(e);
      if (ffp(e + 1, target)) return true;
      remove(e);
    }
    return false;
  }

  std::uint32_t next_allowed(std::uint32_t from) const {
    if (from >= universe_) return kNone;
    std::size_t word = from >> 6;
    std::uint64_t bits = allowed_[word] & (~std::uint64_t{0} << (from & 63));
    while (bits == 0) {
      if (++word >= allowed_.size()) return kNone;
      bits = allowed_[word];
    }
    const std::uint32_t e =
        static_cast<std::uint32_t>((word << 6) + __builtin_ctzll(bits));
    return e < universe_ ? e : kNone;
  }

  std::uint32_t count_allowed_from(std::uint32_t from) const {
    if (from >= universe_) return 0;
    std::size_t word = from >> 6;
    std::uint32_t count = static_cast<std::uint32_t>(
        __builtin_popcountll(allowed_[word] & (~std::uint64_t{0} << (from & 63))));
    for (++word; word < allowed_.size(); ++word)
      count += static_cast<std::uint32_t>(__builtin_popcountll(allowed_[word]));
    return count;
  }

  void set_allowed(std::uint32_t e, bool value) {
    if (value)
      allowed_[e >> 6] |= std::uint64_t{1} << (e & 63);
    else
      allowed_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  void add(std::uint32_t e) {
    for (std::uint32_t id : index_[e]) {
      if (++counts_[id] == overlap_) forbid_members(id, +1);
    }
    if (e >= dead_universe_) ++fresh_in_partial_;
    partial_.push_back(e);
  }

  void remove(std::uint32_t e) {
    for (std::uint32_t id : index_[e]) {
      if (counts_[id]-- == overlap_) forbid_members(id, -1);
    }
    if (e >= dead_universe_) --fresh_in_partial_;
    partial_.pop_back();
  }

  void forbid_members(std::uint32_t id, int delta) {
    for (std::uint32_t member : sets_[id]) {
      const std::uint32_t updated = static_cast<std::uint32_t>(
          static_cast<int>(forbid_[member]) + delta);
      forbid_[member] = updated;
      if (delta > 0 && updated == 1) set_allowed(member, false);
      if (delta < 0 && updated == 0) set_allowed(member, true);
    }
  }

  void commit(const std::vector<std::uint32_t>& set) {
    const std::uint32_t id = static_cast<std::uint32_t>(counts_.size());
    // The cursor may be parked on the yielded subset, so the new counter
    // starts at the live overlap and the forbid state follows it.
    std::uint32_t initial = 0;
    for (std::uint32_t e : partial_)
      if (std::binary_search(set.begin(), set.end(), e)) ++initial;
    counts_.push_back(static_cast<std::uint8_t>(initial));
    sets_.push_back(set);
    index_.resize(universe_);
    forbid_.resize(universe_, 0);
    allowed_.resize((universe_ + 63) / 64, 0);
    for (std::uint32_t e = allowed_high_; e < universe_; ++e) set_allowed(e, true);
    allowed_high_ = universe_;
    for (std::uint32_t e : set) index_[e].push_back(id);
    if (initial >= overlap_) forbid_members(id, +1);
  }

  std::uint32_t t_;
  std::uint32_t overlap_;
  std::uint32_t universe_ = 0;
  std::uint32_t dead_universe_ = 0;   // exhaustion proven below this size
  std::uint32_t fresh_in_partial_ = 0;
  std::uint32_t allowed_high_ = 0;    // elements below this have allowed bits
  bool resume_ = false;
  std::vector<std::vector<std::uint32_t>> sets_;
  std::vector<std::vector<std::uint32_t>> index_;
  std::vector<std::uint8_t> counts_;
  std::vector<std::uint32_t> forbid_;
  std::vector<std::uint64_t> allowed_;
  std::vector<std::uint32_t> partial_;
};

}  // namespace

Design greedy_design(std::uint64_t r, std::uint32_t t, std::uint32_t max_overlap) {
  if (r < 1) throw ValidationError("greedy_design: r must be >= 1");
  if (t < 1) throw ValidationError("greedy_design: t must be >= 1");
  if (max_overlap < 1 || max_overlap > t)
    throw ValidationError("greedy_design: need 1 <= max_overlap <= t");
  GreedyBuilder builder(t, max_overlap);
  Design design;
  design.t = t;
  design.max_overlap = max_overlap;
  design.sets = builder.build(r);
  design.l = builder.universe();
  design.validate();
  return design;
}

std::uint32_t default_design_t(std::uint64_t r) {
  return static_cast<std::uint32_t>(std::max(1, ceil_log2_u64(r)));
}

std::uint32_t default_design_overlap(std::uint32_t t) {
  return std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(ceil_log2_u64(t)));
}

Bits nw_output(const Design& design, const Bits& seed) {
  if (seed.size() != design.l)
    throw DomainError("nw_output: seed length differs from the design ground set");
  Bits out(design.sets.size());
  for (std::size_t i = 0; i < design.sets.size(); ++i) {
    bool parity = false;
    for (std::uint32_t e : design.sets[i]) parity ^= seed.get(e);
    out.set(i, parity);
  }
  return out;
}

BipartiteGraph graph_from_seed(const GraphParams& params, const Design& design,
                               const Bits& seed) {
  params.validate();
  if (design.sets.size() != params.table_bits())
    throw DomainError("graph_from_seed: design r differs from N*D*m");
  return BipartiteGraph(params, nw_output(design, seed));
}

SeedSearchResult solve_R(const GraphParams& params, const Design& design,
                         const RelevantSystem& system, const Rational& alpha,
                         const Rational& beta, std::uint64_t budget,
                         SearchMode mode, std::uint64_t rng_seed) {
  if (budget < 1) throw ValidationError("solve_R: budget must be >= 1");
  params.validate();
  system.validate();

  SplitMix64 stream(rng_seed);
  std::uint64_t limit = budget;
  if (mode == SearchMode::exhaustive && design.l < 64)
    limit = std::min(budget, std::uint64_t{1} << design.l);

  SeedSearchResult result;
  result.mode = mode;
  for (std::uint64_t i = 0; i < limit; ++i) {
    const Bits seed = mode == SearchMode::exhaustive
                          ? Bits::from_uint(i, design.l)
                          : stream.bits(design.l);
    ++result.seeds_examined;
    const BipartiteGraph g = graph_from_seed(params, design, seed);
    if (is_low_congesting(g, system, alpha, beta).ok) {
      // Re-derive and re-check before declaring success.
      const BipartiteGraph again = graph_from_seed(params, design, seed);
      if (is_low_congesting(again, system, alpha, beta).ok) {
        result.found = true;
        result.seed = seed;
        return result;
      }
    }
  }
  return result;
}

}  // namespace lcg
