#include "lcg/rng.hpp"

#include <algorithm>

namespace lcg {

std::vector<std::uint64_t> sample_sorted_subset(SplitMix64& rng,
                                                std::uint64_t universe,
                                                std::uint64_t count) {
  if (count > universe)
    throw DomainError("sample_sorted_subset: count exceeds universe");
  if (universe > (1ULL << 24))
    throw BudgetError("sample_sorted_subset: universe too large");
  std::vector<std::uint64_t> pool(universe);
  for (std::uint64_t i = 0; i < universe; ++i) pool[i] = i;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + rng.bounded(universe - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<std::uint64_t> out(pool.begin(), pool.begin() + count);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lcg
