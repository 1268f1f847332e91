#include "lcg/bitgraph.hpp"

#include <fstream>
#include <sstream>

#include "lcg/rng.hpp"

namespace lcg {

namespace {
constexpr std::uint64_t kMaxTableBits = std::uint64_t{1} << 30;
}

void GraphParams::validate() const {
  if (m < 1 || n < m) throw ValidationError("params: need 1 <= m <= n");
  if (d < 1) throw ValidationError("params: need d >= 1");
  if (k < 1 || k > n) throw ValidationError("params: need 1 <= k <= n");
  if (n > 40 || d > 40) throw ValidationError("params: n or d too large");
  if (eps <= Rational(0) || eps >= Rational(1))
    throw ValidationError("params: eps must lie in (0,1)");
  if (left_size() * degree() > kMaxTableBits / static_cast<std::uint64_t>(m))
    throw ValidationError("params: table would exceed the size cap");
}

BipartiteGraph::BipartiteGraph(GraphParams params, Bits table)
    : params_(params), table_(std::move(table)) {
  params_.validate();
  if (table_.size() != params_.table_bits())
    throw ValidationError("graph: table length must be exactly N*D*m bits");
}

std::uint64_t BipartiteGraph::neighbor(std::uint64_t x, std::uint64_t j) const {
  if (x >= params_.left_size()) throw RangeError("neighbor: x out of range");
  if (j >= params_.degree()) throw RangeError("neighbor: j out of range");
  const std::uint64_t pos = (x * params_.degree() + j) * static_cast<std::uint64_t>(params_.m);
  return table_.read_uint(pos, static_cast<std::size_t>(params_.m));
}

void BipartiteGraph::check_left(std::span<const std::uint64_t> s) const {
  for (std::uint64_t x : s)
    if (x >= params_.left_size()) throw RangeError("left vertex out of range");
}

std::uint64_t BipartiteGraph::indegree_from(std::span<const std::uint64_t> s,
                                            std::uint64_t y) const {
  check_left(s);
  if (y >= params_.right_size()) throw RangeError("right vertex out of range");
  std::uint64_t count = 0;
  const std::uint64_t deg = params_.degree();
  for (std::uint64_t x : s)
    for (std::uint64_t j = 0; j < deg; ++j)
      if (neighbor(x, j) == y) ++count;
  return count;
}

std::uint64_t BipartiteGraph::edge_count(std::span<const std::uint64_t> s,
                                         std::span<const std::uint64_t> ys) const {
  check_left(s);
  std::vector<bool> member(params_.right_size(), false);
  for (std::uint64_t y : ys) {
    if (y >= params_.right_size()) throw RangeError("right vertex out of range");
    member[y] = true;
  }
  std::uint64_t count = 0;
  const std::uint64_t deg = params_.degree();
  for (std::uint64_t x : s)
    for (std::uint64_t j = 0; j < deg; ++j)
      if (member[neighbor(x, j)]) ++count;
  return count;
}

std::vector<std::uint64_t> BipartiteGraph::indegree_table(
    std::span<const std::uint64_t> s) const {
  check_left(s);
  std::vector<std::uint64_t> indeg(params_.right_size(), 0);
  const std::uint64_t deg = params_.degree();
  for (std::uint64_t x : s)
    for (std::uint64_t j = 0; j < deg; ++j) ++indeg[neighbor(x, j)];
  return indeg;
}

BipartiteGraph random_graph(const GraphParams& params, std::uint64_t rng_seed) {
  params.validate();
  SplitMix64 rng(rng_seed);
  const std::uint64_t entries = params.left_size() * params.degree();
  const std::uint64_t mask = params.right_size() - 1;
  Bits table;
  for (std::uint64_t i = 0; i < entries; ++i)
    table.append_uint(rng.next() & mask, static_cast<std::size_t>(params.m));
  return BipartiteGraph(params, std::move(table));
}

BipartiteGraph graph_from_rule(
    const GraphParams& params,
    const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& rule) {
  params.validate();
  Bits table;
  for (std::uint64_t x = 0; x < params.left_size(); ++x)
    for (std::uint64_t j = 0; j < params.degree(); ++j) {
      const std::uint64_t y = rule(x, j);
      if (y >= params.right_size()) throw RangeError("graph rule: id out of range");
      table.append_uint(y, static_cast<std::size_t>(params.m));
    }
  return BipartiteGraph(params, std::move(table));
}

std::string serialize(const BipartiteGraph& g) {
  std::ostringstream out;
  const GraphParams& p = g.params();
  out << "LCG1 " << p.n << " " << p.m << " " << p.d << " " << p.k << " "
      << format_rational(p.eps) << "\n";
  const auto& bytes = g.table().bytes();
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  return out.str();
}

BipartiteGraph parse_graph(const std::string& bytes) {
  const auto nl = bytes.find('\n');
  if (nl == std::string::npos) throw ParseError("graph: missing header newline");
  std::istringstream header(bytes.substr(0, nl));
  std::string magic, eps_text;
  GraphParams p;
  if (!(header >> magic >> p.n >> p.m >> p.d >> p.k >> eps_text) || magic != "LCG1")
    throw ParseError("graph: malformed header");
  std::string extra;
  if (header >> extra) throw ParseError("graph: trailing header fields");
  p.eps = parse_rational(eps_text);
  p.validate();
  const std::uint64_t nbits = p.table_bits();
  const std::size_t want = static_cast<std::size_t>((nbits + 7) / 8);
  const std::string payload = bytes.substr(nl + 1);
  if (payload.size() != want)
    throw ParseError("graph: payload is " + std::to_string(payload.size()) +
                     " bytes, expected " + std::to_string(want));
  std::vector<std::uint8_t> raw(payload.begin(), payload.end());
  return BipartiteGraph(p, Bits::from_bytes(raw, static_cast<std::size_t>(nbits)));
}

BipartiteGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open graph file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void save_graph_file(const BipartiteGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write graph file: " + path);
  const std::string data = serialize(g);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace lcg
