#pragma once

#include <cstdint>
#include <vector>

#include "lcg/bitgraph.hpp"
#include "lcg/bits.hpp"
#include "lcg/rational.hpp"
#include "lcg/toy_machine.hpp"

namespace lcg {

enum class GateKind : std::uint8_t {
  kInput,
  kConst,
  kNot,
  kAnd,
  kOr,
  kApproxThreshold,
};

// Constant-depth DAG over the graph-encoding bits. Gates are stored in
// topological order: every fan-in references an earlier node.
struct Gate {
  GateKind kind = GateKind::kConst;
  std::uint32_t bit = 0;    // kInput: encoding bit index
  bool value = false;       // kConst
  Rational low, high;       // kApproxThreshold, as fractions of the fan-in
  std::vector<std::uint32_t> fanin;
};

struct Circuit {
  std::vector<Gate> gates;
  std::uint32_t output = 0;

  void validate() const;
};

struct CircuitStats {
  std::uint64_t size = 0;   // total node count
  std::uint64_t depth = 0;  // longest path; inputs/constants at depth 0,
                            // every other gate (threshold included) adds 1
};

CircuitStats stats(const Circuit& c);

// Promise-threshold evaluation: a kApproxThreshold gate outputs 1 iff the
// fraction of 1-inputs is >= (low+high)/2, which satisfies both promise
// directions (0 below low, 1 above high). Fractions above 1 make the gate a
// constant 0; this happens legitimately when the counting thresholds exceed
// the fan-in at small scales.
bool evaluate(const Circuit& c, const Bits& input);

// 2m-input equality circuit comparing the m-bit segments at offset_a and
// offset_b; depth <= 4 regardless of m.
Circuit build_comparator(int m, std::uint64_t offset_a, std::uint64_t offset_b);

// The low-congestion distinguisher over the N*D*m encoding bits: per set S
// and segment y, comparators against all |S|*D-1 other segments feed a
// counting gate with count thresholds (2DK/M, 2.01DK/M); per block, an AND
// of its D segment gates; a final negated counting gate with thresholds
// (2eps*K, 2.01eps*K) over the |S| block outputs; a top-level AND over all
// sets. K is the system bound, eps comes from params.
Circuit build_distinguisher(const GraphParams& params, const RelevantSystem& system);

}  // namespace lcg
