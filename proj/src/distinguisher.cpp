#include "lcg/distinguisher.hpp"

#include <algorithm>
#include <map>

namespace lcg {

void Circuit::validate() const {
  if (gates.empty()) throw ValidationError("circuit: no gates");
  if (output >= gates.size()) throw ValidationError("circuit: output out of range");
  for (std::uint32_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    for (std::uint32_t f : g.fanin)
      if (f >= i) throw ValidationError("circuit: fan-in must reference an earlier node");
    switch (g.kind) {
      case GateKind::kInput:
      case GateKind::kConst:
        if (!g.fanin.empty()) throw ValidationError("circuit: leaf with fan-in");
        break;
      case GateKind::kNot:
        if (g.fanin.size() != 1) throw ValidationError("circuit: NOT needs one input");
        break;
      case GateKind::kAnd:
      case GateKind::kOr:
        if (g.fanin.empty()) throw ValidationError("circuit: AND/OR needs inputs");
        break;
      case GateKind::kApproxThreshold:
        if (g.fanin.empty())
          throw ValidationError("circuit: threshold gate needs inputs");
        if (g.low < Rational(0) || g.low >= g.high)
          throw ValidationError("circuit: threshold needs 0 <= low < high");
        break;
    }
  }
}

CircuitStats stats(const Circuit& c) {
  CircuitStats out;
  out.size = c.gates.size();
  std::vector<std::uint64_t> depth(c.gates.size(), 0);
  for (std::uint32_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.kind == GateKind::kInput || g.kind == GateKind::kConst) continue;
    std::uint64_t best = 0;
    for (std::uint32_t f : g.fanin) best = std::max(best, depth[f]);
    depth[i] = best + 1;
  }
  for (std::uint64_t d : depth) out.depth = std::max(out.depth, d);
  return out;
}

bool evaluate(const Circuit& c, const Bits& input) {
  c.validate();
  std::vector<char> value(c.gates.size(), 0);
  for (std::uint32_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.kind) {
      case GateKind::kInput:
        if (g.bit >= input.size())
          throw DomainError("evaluate: input bit " + std::to_string(g.bit) +
                            " missing");
        value[i] = input.get(g.bit);
        break;
      case GateKind::kConst:
        value[i] = g.value;
        break;
      case GateKind::kNot:
        value[i] = !value[g.fanin[0]];
        break;
      case GateKind::kAnd: {
        bool v = true;
        for (std::uint32_t f : g.fanin) v = v && value[f];
        value[i] = v;
        break;
      }
      case GateKind::kOr: {
        bool v = false;
        for (std::uint32_t f : g.fanin) v = v || value[f];
        value[i] = v;
        break;
      }
      case GateKind::kApproxThreshold: {
        long long ones = 0;
        for (std::uint32_t f : g.fanin) ones += value[f];
        const Rational fraction(ones, static_cast<long long>(g.fanin.size()));
        value[i] = fraction >= (g.low + g.high) / 2;
        break;
      }
    }
  }
  return value[c.output];
}

namespace {

// Incremental circuit builder with input-node and comparator sharing.
class Builder {
public:
  std::uint32_t input(std::uint64_t bit) {
    auto it = inputs_.find(bit);
    if (it != inputs_.end()) return it->second;
    Gate g;
    g.kind = GateKind::kInput;
    g.bit = static_cast<std::uint32_t>(bit);
    const std::uint32_t id = push(g);
    inputs_.emplace(bit, id);
    return id;
  }

  std::uint32_t constant(bool v) {
    Gate g;
    g.kind = GateKind::kConst;
    g.value = v;
    return push(g);
  }

  std::uint32_t gate_not(std::uint32_t a) {
    auto it = nots_.find(a);
    if (it != nots_.end()) return it->second;
    Gate g;
    g.kind = GateKind::kNot;
    g.fanin = {a};
    const std::uint32_t id = push(g);
    nots_.emplace(a, id);
    return id;
  }

  std::uint32_t gate_and(std::vector<std::uint32_t> in) {
    Gate g;
    g.kind = GateKind::kAnd;
    g.fanin = std::move(in);
    return push(g);
  }

  std::uint32_t gate_or(std::vector<std::uint32_t> in) {
    Gate g;
    g.kind = GateKind::kOr;
    g.fanin = std::move(in);
    return push(g);
  }

  std::uint32_t threshold(const Rational& low, const Rational& high,
                          std::vector<std::uint32_t> in) {
    Gate g;
    g.kind = GateKind::kApproxThreshold;
    g.low = low;
    g.high = high;
    g.fanin = std::move(in);
    return push(g);
  }

  // Equality of the m-bit segments at the two offsets, depth <= 4:
  // AND over bit positions of OR(AND(a,b), AND(~a,~b)).
  std::uint32_t comparator(int m, std::uint64_t off_a, std::uint64_t off_b) {
    const auto key = std::minmax(off_a, off_b);
    auto it = comparators_.find(key);
    if (it != comparators_.end()) return it->second;
    std::vector<std::uint32_t> eq_bits;
    eq_bits.reserve(m);
    for (int i = 0; i < m; ++i) {
      const std::uint32_t a = input(off_a + i);
      const std::uint32_t b = input(off_b + i);
      const std::uint32_t both = gate_and({a, b});
      const std::uint32_t neither = gate_and({gate_not(a), gate_not(b)});
      eq_bits.push_back(gate_or({both, neither}));
    }
    const std::uint32_t id = gate_and(std::move(eq_bits));
    comparators_.emplace(key, id);
    return id;
  }

  Circuit finish(std::uint32_t output) {
    Circuit c;
    c.gates = std::move(gates_);
    c.output = output;
    c.validate();
    return c;
  }

private:
  std::uint32_t push(Gate g) {
    gates_.push_back(std::move(g));
    return static_cast<std::uint32_t>(gates_.size() - 1);
  }

  std::vector<Gate> gates_;
  std::map<std::uint64_t, std::uint32_t> inputs_;
  std::map<std::uint32_t, std::uint32_t> nots_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint32_t> comparators_;
};

}  // namespace

Circuit build_comparator(int m, std::uint64_t offset_a, std::uint64_t offset_b) {
  if (m < 1) throw ValidationError("comparator: m must be >= 1");
  Builder b;
  return b.finish(b.comparator(m, offset_a, offset_b));
}

Circuit build_distinguisher(const GraphParams& params, const RelevantSystem& system) {
  params.validate();
  system.validate();

  Builder b;
  const int m = params.m;
  const std::uint64_t deg = params.degree();
  const long long right = static_cast<long long>(params.right_size());
  const long long bound = static_cast<long long>(system.bound);
  const Rational alpha_lo(2), alpha_hi(201, 100);
  // Count thresholds for the per-segment gate: (2 D K / M, 2.01 D K / M).
  const Rational indeg_lo = alpha_lo * Rational(static_cast<long long>(deg) * bound, right);
  const Rational indeg_hi = alpha_hi * Rational(static_cast<long long>(deg) * bound, right);

  std::vector<std::uint32_t> per_set;
  for (const auto& s : system.sets) {
    if (s.empty()) {
      per_set.push_back(b.constant(true));
      continue;
    }
    const std::uint64_t segments = s.size() * deg;
    const long long others = static_cast<long long>(segments) - 1;

    auto segment_offset = [&](std::size_t block, std::uint64_t j) {
      return (s[block] * deg + j) * static_cast<std::uint64_t>(m);
    };

    std::vector<std::uint32_t> block_gates;
    for (std::size_t block = 0; block < s.size(); ++block) {
      std::vector<std::uint32_t> segment_gates;
      for (std::uint64_t j = 0; j < deg; ++j) {
        const std::uint64_t self = segment_offset(block, j);
        std::vector<std::uint32_t> hits;
        hits.reserve(static_cast<std::size_t>(others));
        for (std::size_t ob = 0; ob < s.size(); ++ob)
          for (std::uint64_t oj = 0; oj < deg; ++oj) {
            if (ob == block && oj == j) continue;
            hits.push_back(b.comparator(m, self, segment_offset(ob, oj)));
          }
        if (others == 0) {
          // A single-segment set can never pass a positive count threshold.
          segment_gates.push_back(b.constant(false));
        } else {
          segment_gates.push_back(b.threshold(indeg_lo / others,
                                              indeg_hi / others,
                                              std::move(hits)));
        }
      }
      block_gates.push_back(b.gate_and(std::move(segment_gates)));
    }

    // Negated counting gate over the block outputs: 1 means few congested.
    const long long set_size = static_cast<long long>(s.size());
    const Rational cong_lo = Rational(2) * params.eps * bound / set_size;
    const Rational cong_hi = Rational(201, 100) * params.eps * bound / set_size;
    const std::uint32_t counting =
        b.threshold(cong_lo, cong_hi, std::move(block_gates));
    per_set.push_back(b.gate_not(counting));
  }

  if (per_set.empty()) return b.finish(b.constant(true));
  return b.finish(b.gate_and(std::move(per_set)));
}

}  // namespace lcg
