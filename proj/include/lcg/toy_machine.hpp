#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcg/bits.hpp"

namespace lcg {

// A fixed, fully specified space-metered description machine. A program is a
// 2-bit opcode followed by a payload w:
//   00 LIT   output w                                  cost |w|
//   01 XORB  output w XOR (b cyclically extended)      cost |w| + 1
//   10 PREF  l = value(w); output first l bits of the
//            cyclic extension of b                     cost l + 2
//   11 REV   output w reversed                         cost 2|w|
// The cyclic extension of an empty b is all zeros, keeping every program
// total. Returns nullopt when the cost exceeds space_limit.
std::optional<Bits> run_toy(const Bits& program, const Bits& condition,
                            std::uint64_t space_limit);

// True iff some program of length in [2, k) emits x within space s.
bool ks_bounded(const Bits& x, const Bits& condition, int k, std::uint64_t s);

// { x in {0,1}^n : ks_bounded(x, b, k, s) } as big-endian left-vertex
// indices, ascending.
std::vector<std::uint64_t> relevant_set(const Bits& condition, int k,
                                        std::uint64_t s, int n);

struct PivotalLimits {
  Bits condition;
  std::vector<std::uint64_t> limits;  // ascending space values where the set grows
};

// All s <= s_bar with relevant_set(b,k,s) != relevant_set(b,k,s-1), taking
// the set at s = 0 as empty.
PivotalLimits pivotal_limits(const Bits& condition, int k, std::uint64_t s_bar, int n);

struct SetProvenance {
  std::size_t condition_index = 0;
  Bits condition;
  std::uint64_t space = 0;  // the pivotal limit that produced the set
};

// An explicitly enumerated family of left subsets bounded by `bound`.
// Machine-built families are strictly smaller than 2^k by counting;
// hand-built ones may reach the bound exactly.
struct RelevantSystem {
  int n = 0;                 // ambient string length; members < 2^n
  int k = 0;                 // the machine bound the family was built with
  std::uint64_t bound = 0;   // K: clot threshold and congested-count scale
  std::vector<std::vector<std::uint64_t>> sets;
  std::vector<SetProvenance> provenance;

  void validate() const;

  // Same family under a tighter (or different) analysis bound K.
  RelevantSystem with_bound(std::uint64_t new_bound) const;

  std::uint64_t max_set_size() const;
};

// For each condition in order, for each pivotal s <= s_bar in order, appends
// relevant_set(b, k, s). Duplicate sets are retained (provenance differs).
RelevantSystem build_system(const std::vector<Bits>& conditions, int k,
                            std::uint64_t s_bar, int n);

}  // namespace lcg
