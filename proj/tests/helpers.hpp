#pragma once

#include <vector>

#include "lcg/bitgraph.hpp"

namespace testutil {

// Test graph: n=3, m=2, d=1 with neighbor(x,0) = x mod 4 and
// neighbor(x,1) = (x+1) mod 4. Carries k=2 (K=4) and eps=1/4.
inline lcg::BipartiteGraph make_cyc() {
  lcg::GraphParams p{3, 2, 1, 2, lcg::Rational(1, 4)};
  return lcg::graph_from_rule(p, [](std::uint64_t x, std::uint64_t j) {
    return (x + j) % 4;
  });
}

// Every edge lands on right vertex 0; same parameters as make_cyc.
inline lcg::BipartiteGraph make_const() {
  lcg::GraphParams p{3, 2, 1, 2, lcg::Rational(1, 4)};
  return lcg::graph_from_rule(p, [](std::uint64_t, std::uint64_t) { return 0; });
}

inline std::vector<std::uint64_t> set_of(std::initializer_list<std::uint64_t> xs) {
  return std::vector<std::uint64_t>(xs);
}

}  // namespace testutil
