#pragma once

#include <json.hpp>

#include "lcg/codec.hpp"
#include "lcg/congestion.hpp"
#include "lcg/distinguisher.hpp"
#include "lcg/extractor.hpp"
#include "lcg/nw_generator.hpp"
#include "lcg/toy_machine.hpp"

// JSON renderings of every report and artifact the CLI exchanges. All object
// keys are emitted in sorted order and rationals as "num/den" strings, so a
// report is a pure function of its inputs byte for byte.
namespace lcg {

using Json = nlohmann::json;

Json bits_to_json(const Bits& bits);
Bits bits_from_json(const Json& j);

Json deviation_to_json(const DeviationReport& report);

Json congestion_to_json(const CongestionReport& report);

Json peel_to_json(const PeelTrace& trace);

Json system_to_json(const RelevantSystem& system);
RelevantSystem system_from_json(const Json& j);

Json design_to_json(const Design& design);
Design design_from_json(const Json& j);

Json seed_search_to_json(const SeedSearchResult& result, const Design& design);

Json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& j);

Json encoding_to_json(const Encoding& encoding);
Encoding encoding_from_json(const Json& j);

Json plan_to_json(const LevelPlan& plan);
LevelPlan plan_from_json(const Json& j);

// File helpers (binary-safe, trailing newline for text tools).
void write_json_file(const Json& j, const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace lcg
