#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lcg/bits.hpp"
#include "lcg/rational.hpp"

namespace lcg {

// Left-regular bipartite graph parameters, all log-sized:
// N = 2^n left vertices, M = 2^m right vertices, D = 2^d edges per left
// vertex, K = 2^k the relevant-set bound carried with the graph.
struct GraphParams {
  int n = 0;
  int m = 0;
  int d = 0;
  int k = 0;
  Rational eps;

  void validate() const;

  std::uint64_t left_size() const { return std::uint64_t{1} << n; }
  std::uint64_t right_size() const { return std::uint64_t{1} << m; }
  std::uint64_t degree() const { return std::uint64_t{1} << d; }
  std::uint64_t set_bound() const { return std::uint64_t{1} << k; }
  // Total encoding length in bits: N * D * m.
  std::uint64_t table_bits() const { return left_size() * degree() * static_cast<std::uint64_t>(m); }

  bool operator==(const GraphParams& o) const {
    return n == o.n && m == o.m && d == o.d && k == o.k && eps == o.eps;
  }
};

// The neighbor table is one packed bit vector of length N*D*m: for each left
// vertex x (major) and edge index j, an m-bit big-endian right-vertex id.
// This layout is also the circuit input wiring and the file payload.
class BipartiteGraph {
public:
  BipartiteGraph(GraphParams params, Bits table);

  const GraphParams& params() const { return params_; }
  const Bits& table() const { return table_; }

  std::uint64_t neighbor(std::uint64_t x, std::uint64_t j) const;

  // Number of (x in s, j < D) pairs with neighbor(x, j) == y; multi-edges
  // counted with multiplicity.
  std::uint64_t indegree_from(std::span<const std::uint64_t> s, std::uint64_t y) const;

  // Sum of indegree_from over all y in ys.
  std::uint64_t edge_count(std::span<const std::uint64_t> s,
                           std::span<const std::uint64_t> ys) const;

  // Indegrees of every right vertex from s, as a dense vector of length M.
  std::vector<std::uint64_t> indegree_table(std::span<const std::uint64_t> s) const;

private:
  void check_left(std::span<const std::uint64_t> s) const;

  GraphParams params_;
  Bits table_;
};

// Table entries i.i.d. uniform over [0, M): entry (x, j) is the low m bits of
// the (x*D + j)-th SplitMix64 output seeded with rng_seed.
BipartiteGraph random_graph(const GraphParams& params, std::uint64_t rng_seed);

// Builds a graph from an explicit neighbor rule (test and construction aid).
BipartiteGraph graph_from_rule(
    const GraphParams& params,
    const std::function<std::uint64_t(std::uint64_t x, std::uint64_t j)>& rule);

// File format: "LCG1 n m d k num/den\n" then ceil(N*D*m/8) payload bytes,
// zero-padded. parse(serialize(g)) == g bit-exactly.
std::string serialize(const BipartiteGraph& g);
BipartiteGraph parse_graph(const std::string& bytes);

BipartiteGraph load_graph_file(const std::string& path);
void save_graph_file(const BipartiteGraph& g, const std::string& path);

}  // namespace lcg
