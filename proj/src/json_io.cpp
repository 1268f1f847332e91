#include "lcg/json_io.hpp"

#include <fstream>

namespace lcg {
namespace {

void expect_schema(const Json& j, const std::string& id) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != id)
    throw ParseError("json: expected schema " + id);
}

Json rational_json(const Rational& r) { return format_rational(r); }

Rational rational_from(const Json& j) { return parse_rational(j.get<std::string>()); }

}  // namespace

Json bits_to_json(const Bits& bits) {
  return Json{{"hex", bits.to_hex()}, {"bits", bits.size()}};
}

Bits bits_from_json(const Json& j) {
  return Bits::from_hex(j.at("hex").get<std::string>(), j.at("bits").get<std::size_t>());
}

Json deviation_to_json(const DeviationReport& report) {
  return Json{{"schema", "lcg.deviation/1"},
              {"set", report.set},
              {"deviation", rational_json(report.deviation)},
              {"worst_y", report.worst_y}};
}

Json congestion_to_json(const CongestionReport& report) {
  return Json{{"schema", "lcg.congestion/1"},
              {"threshold", rational_json(report.threshold)},
              {"clot", report.clot},
              {"congested", report.congested}};
}

Json peel_to_json(const PeelTrace& trace) {
  return Json{{"schema", "lcg.peel/1"},
              {"levels", trace.levels},
              {"terminated", trace.terminated}};
}

Json system_to_json(const RelevantSystem& system) {
  Json sets = Json::array();
  for (std::size_t i = 0; i < system.sets.size(); ++i) {
    sets.push_back(Json{{"members", system.sets[i]},
                        {"condition", bits_to_json(system.provenance[i].condition)},
                        {"condition_index", system.provenance[i].condition_index},
                        {"s", system.provenance[i].space}});
  }
  return Json{{"schema", "lcg.system/1"},
              {"n", system.n},
              {"k", system.k},
              {"bound", system.bound},
              {"sets", sets}};
}

RelevantSystem system_from_json(const Json& j) {
  expect_schema(j, "lcg.system/1");
  RelevantSystem system;
  system.n = j.at("n").get<int>();
  system.k = j.at("k").get<int>();
  system.bound = j.at("bound").get<std::uint64_t>();
  for (const auto& entry : j.at("sets")) {
    system.sets.push_back(entry.at("members").get<std::vector<std::uint64_t>>());
    SetProvenance prov;
    prov.condition = bits_from_json(entry.at("condition"));
    prov.condition_index = entry.at("condition_index").get<std::size_t>();
    prov.space = entry.at("s").get<std::uint64_t>();
    system.provenance.push_back(std::move(prov));
  }
  system.validate();
  return system;
}

Json design_to_json(const Design& design) {
  return Json{{"schema", "lcg.design/1"},
              {"l", design.l},
              {"t", design.t},
              {"max_overlap", design.max_overlap},
              {"sets", design.sets}};
}

Design design_from_json(const Json& j) {
  expect_schema(j, "lcg.design/1");
  Design design;
  design.l = j.at("l").get<std::uint32_t>();
  design.t = j.at("t").get<std::uint32_t>();
  design.max_overlap = j.at("max_overlap").get<std::uint32_t>();
  design.sets = j.at("sets").get<std::vector<std::vector<std::uint32_t>>>();
  design.validate();
  return design;
}

Json seed_search_to_json(const SeedSearchResult& result, const Design& design) {
  Json j{{"schema", "lcg.seed-search/1"},
         {"found", result.found},
         {"seeds_examined", result.seeds_examined},
         {"mode", result.mode == SearchMode::exhaustive ? "exhaustive" : "sampled"},
         {"l", design.l},
         {"r", design.sets.size()}};
  j["seed"] = result.found ? bits_to_json(result.seed) : Json();
  return j;
}

namespace {
const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::kInput: return "input";
    case GateKind::kConst: return "const";
    case GateKind::kNot: return "not";
    case GateKind::kAnd: return "and";
    case GateKind::kOr: return "or";
    case GateKind::kApproxThreshold: return "approx_threshold";
  }
  return "?";
}

GateKind gate_kind_from(const std::string& name) {
  if (name == "input") return GateKind::kInput;
  if (name == "const") return GateKind::kConst;
  if (name == "not") return GateKind::kNot;
  if (name == "and") return GateKind::kAnd;
  if (name == "or") return GateKind::kOr;
  if (name == "approx_threshold") return GateKind::kApproxThreshold;
  throw ParseError("circuit: unknown gate kind " + name);
}
}  // namespace

Json circuit_to_json(const Circuit& circuit) {
  Json gates = Json::array();
  for (const Gate& g : circuit.gates) {
    Json entry{{"kind", gate_kind_name(g.kind)}};
    switch (g.kind) {
      case GateKind::kInput:
        entry["bit"] = g.bit;
        break;
      case GateKind::kConst:
        entry["value"] = g.value;
        break;
      case GateKind::kApproxThreshold:
        entry["low"] = rational_json(g.low);
        entry["high"] = rational_json(g.high);
        entry["fanin"] = g.fanin;
        break;
      default:
        entry["fanin"] = g.fanin;
        break;
    }
    gates.push_back(std::move(entry));
  }
  const CircuitStats st = stats(circuit);
  return Json{{"schema", "lcg.circuit/1"},
              {"gates", gates},
              {"output", circuit.output},
              {"size", st.size},
              {"depth", st.depth}};
}

Circuit circuit_from_json(const Json& j) {
  expect_schema(j, "lcg.circuit/1");
  Circuit circuit;
  for (const auto& entry : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from(entry.at("kind").get<std::string>());
    switch (g.kind) {
      case GateKind::kInput:
        g.bit = entry.at("bit").get<std::uint32_t>();
        break;
      case GateKind::kConst:
        g.value = entry.at("value").get<bool>();
        break;
      case GateKind::kApproxThreshold:
        g.low = rational_from(entry.at("low"));
        g.high = rational_from(entry.at("high"));
        g.fanin = entry.at("fanin").get<std::vector<std::uint32_t>>();
        break;
      default:
        g.fanin = entry.at("fanin").get<std::vector<std::uint32_t>>();
        break;
    }
    circuit.gates.push_back(std::move(g));
  }
  circuit.output = j.at("output").get<std::uint32_t>();
  circuit.validate();
  return circuit;
}

Json encoding_to_json(const Encoding& encoding) {
  return Json{{"schema", "lcg.encoding/1"},
              {"p", bits_to_json(encoding.p)},
              {"level", encoding.level},
              {"set_index", encoding.set_index},
              {"ordinal", encoding.ordinal},
              {"edge_index", encoding.edge_index}};
}

Encoding encoding_from_json(const Json& j) {
  expect_schema(j, "lcg.encoding/1");
  Encoding encoding;
  encoding.p = bits_from_json(j.at("p"));
  encoding.level = j.at("level").get<std::uint64_t>();
  encoding.set_index = j.at("set_index").get<std::uint64_t>();
  encoding.ordinal = j.at("ordinal").get<std::uint64_t>();
  encoding.edge_index = j.at("edge_index").get<std::uint64_t>();
  return encoding;
}

namespace {
Json params_to_json(const GraphParams& p) {
  return Json{{"n", p.n}, {"m", p.m}, {"d", p.d}, {"k", p.k},
              {"eps", rational_json(p.eps)}};
}

GraphParams params_from_json(const Json& j) {
  GraphParams p;
  p.n = j.at("n").get<int>();
  p.m = j.at("m").get<int>();
  p.d = j.at("d").get<int>();
  p.k = j.at("k").get<int>();
  p.eps = rational_from(j.at("eps"));
  p.validate();
  return p;
}
}  // namespace

Json plan_to_json(const LevelPlan& plan) {
  Json levels = Json::array();
  for (const auto& lvl : plan.levels) {
    Json entry{{"bound", lvl.bound},
               {"params", params_to_json(lvl.params)},
               {"seed", bits_to_json(lvl.seed)},
               {"table", bits_to_json(lvl.graph.table())}};
    entry["design"] = lvl.design ? design_to_json(*lvl.design) : Json();
    levels.push_back(std::move(entry));
  }
  Json systems = Json::array();
  for (const auto& sys : plan.systems) systems.push_back(system_to_json(sys));
  return Json{{"schema", "lcg.plan/1"}, {"levels", levels}, {"systems", systems}};
}

LevelPlan plan_from_json(const Json& j) {
  expect_schema(j, "lcg.plan/1");
  LevelPlan plan;
  for (const auto& entry : j.at("levels")) {
    const GraphParams params = params_from_json(entry.at("params"));
    Bits table = bits_from_json(entry.at("table"));
    CodecLevel lvl{entry.at("bound").get<std::uint64_t>(),
                   params,
                   entry.at("design").is_null()
                       ? std::nullopt
                       : std::optional<Design>(design_from_json(entry.at("design"))),
                   bits_from_json(entry.at("seed")),
                   BipartiteGraph(params, std::move(table))};
    plan.levels.push_back(std::move(lvl));
  }
  for (const auto& sys : j.at("systems")) plan.systems.push_back(system_from_json(sys));
  if (plan.systems.size() != plan.levels.size() + 1)
    throw ParseError("plan: systems must outnumber levels by one");
  return plan;
}

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

}  // namespace lcg
