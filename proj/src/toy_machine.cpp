#include "lcg/toy_machine.hpp"

#include <algorithm>
#include <map>

#include "lcg/errors.hpp"

namespace lcg {
namespace {

constexpr int kMaxMachineBound = 22;  // programs enumerated up to 2^(k-1)

bool cyclic_bit(const Bits& b, std::uint64_t i) {
  if (b.empty()) return false;
  return b.get(static_cast<std::size_t>(i % b.size()));
}

struct RunResult {
  Bits output;
  std::uint64_t cost = 0;
};

RunResult run_unmetered(const Bits& program, const Bits& condition) {
  if (program.size() < 2) throw ValidationError("toy program: shorter than 2 bits");
  const int opcode = static_cast<int>(program.read_uint(0, 2));
  const std::size_t wlen = program.size() - 2;
  RunResult r;
  switch (opcode) {
    case 0: {  // LIT
      r.output = Bits(wlen);
      for (std::size_t i = 0; i < wlen; ++i) r.output.set(i, program.get(2 + i));
      r.cost = wlen;
      break;
    }
    case 1: {  // XORB
      r.output = Bits(wlen);
      for (std::size_t i = 0; i < wlen; ++i)
        r.output.set(i, program.get(2 + i) ^ cyclic_bit(condition, i));
      r.cost = wlen + 1;
      break;
    }
    case 2: {  // PREF
      const std::uint64_t l = wlen == 0 ? 0 : program.read_uint(2, wlen);
      r.output = Bits(static_cast<std::size_t>(l));
      for (std::uint64_t i = 0; i < l; ++i)
        r.output.set(static_cast<std::size_t>(i), cyclic_bit(condition, i));
      r.cost = l + 2;
      break;
    }
    default: {  // REV
      r.output = Bits(wlen);
      for (std::size_t i = 0; i < wlen; ++i)
        r.output.set(i, program.get(2 + (wlen - 1 - i)));
      r.cost = 2 * wlen;
      break;
    }
  }
  return r;
}

void check_machine_bound(int k) {
  if (k > kMaxMachineBound)
    throw BudgetError("toy machine: k exceeds the enumeration bound");
}

// Minimal cost at which each n-bit string becomes describable with programs
// of length < k; absent strings have no such program.
std::map<std::uint64_t, std::uint64_t> min_costs(const Bits& condition, int k, int n) {
  check_machine_bound(k);
  std::map<std::uint64_t, std::uint64_t> best;
  for (int len = 2; len < k; ++len) {
    const std::uint64_t programs = std::uint64_t{1} << len;
    for (std::uint64_t bits = 0; bits < programs; ++bits) {
      const auto r = run_unmetered(
          Bits::from_uint(bits, static_cast<std::size_t>(len)), condition);
      if (r.output.size() != static_cast<std::size_t>(n)) continue;
      const std::uint64_t x = r.output.to_uint();
      auto it = best.find(x);
      if (it == best.end() || r.cost < it->second) best[x] = r.cost;
    }
  }
  return best;
}

}  // namespace

std::optional<Bits> run_toy(const Bits& program, const Bits& condition,
                            std::uint64_t space_limit) {
  auto r = run_unmetered(program, condition);
  if (r.cost > space_limit) return std::nullopt;
  return std::move(r.output);
}

bool ks_bounded(const Bits& x, const Bits& condition, int k, std::uint64_t s) {
  check_machine_bound(k);
  for (int len = 2; len < k; ++len) {
    const std::uint64_t programs = std::uint64_t{1} << len;
    for (std::uint64_t bits = 0; bits < programs; ++bits) {
      const auto r = run_unmetered(
          Bits::from_uint(bits, static_cast<std::size_t>(len)), condition);
      if (r.cost <= s && r.output == x) return true;
    }
  }
  return false;
}

std::vector<std::uint64_t> relevant_set(const Bits& condition, int k,
                                        std::uint64_t s, int n) {
  std::vector<std::uint64_t> out;
  for (const auto& [x, cost] : min_costs(condition, k, n))
    if (cost <= s) out.push_back(x);
  return out;  // map iteration is already ascending
}

PivotalLimits pivotal_limits(const Bits& condition, int k, std::uint64_t s_bar, int n) {
  if (s_bar < 1) throw ValidationError("pivotal_limits: s_bar must be >= 1");
  PivotalLimits result;
  result.condition = condition;
  // The set at space s is { x : min_cost(x) <= s }, so it grows exactly at
  // the distinct minimal costs.
  std::vector<std::uint64_t> costs;
  for (const auto& [x, cost] : min_costs(condition, k, n)) costs.push_back(cost);
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
  for (std::uint64_t c : costs)
    if (c >= 1 && c <= s_bar) result.limits.push_back(c);
  return result;
}

void RelevantSystem::validate() const {
  if (bound == 0) throw ValidationError("system: bound must be >= 1");
  if (sets.size() != provenance.size())
    throw ValidationError("system: provenance must align with sets");
  for (const auto& s : sets) {
    if (s.size() > bound)
      throw ValidationError("system: a set exceeds the size bound");
    if (std::adjacent_find(s.begin(), s.end(),
                           [](auto a, auto b) { return a >= b; }) != s.end())
      throw ValidationError("system: sets must be strictly ascending");
    for (std::uint64_t x : s)
      if (n < 64 && x >= (std::uint64_t{1} << n))
        throw ValidationError("system: member exceeds 2^n");
  }
}

RelevantSystem RelevantSystem::with_bound(std::uint64_t new_bound) const {
  RelevantSystem out = *this;
  out.bound = new_bound;
  out.validate();
  return out;
}

std::uint64_t RelevantSystem::max_set_size() const {
  std::uint64_t best = 0;
  for (const auto& s : sets) best = std::max<std::uint64_t>(best, s.size());
  return best;
}

RelevantSystem build_system(const std::vector<Bits>& conditions, int k,
                            std::uint64_t s_bar, int n) {
  if (conditions.empty())
    throw ValidationError("build_system: conditions must be nonempty");
  RelevantSystem system;
  system.n = n;
  system.k = k;
  system.bound = std::uint64_t{1} << k;
  for (std::size_t ci = 0; ci < conditions.size(); ++ci) {
    const auto pivots = pivotal_limits(conditions[ci], k, s_bar, n);
    for (std::uint64_t s : pivots.limits) {
      system.sets.push_back(relevant_set(conditions[ci], k, s, n));
      system.provenance.push_back(SetProvenance{ci, conditions[ci], s});
    }
  }
  if (system.sets.size() > conditions.size() * system.bound)
    throw ValidationError("build_system: family exceeds its size bound");
  // Fewer than 2^k programs of length below k, so strictly fewer members.
  for (const auto& s : system.sets)
    if (s.size() >= system.bound)
      throw Error("build_system: counting bound violated");
  system.validate();
  return system;
}

}  // namespace lcg
