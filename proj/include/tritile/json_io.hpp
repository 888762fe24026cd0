#pragma once

#include "tritile/analysis.hpp"
#include "tritile/invariant.hpp"
#include "tritile/tiling.hpp"

#include <json.hpp>

#include <string>

namespace tritile {

// Interchange schema:
//   {"spec": {"alpha", "a", "b", "c", "angle_mode", "side_mode"},
//    "region": [[x,y],...],        optional
//    "fragment": bool,             optional, default false
//    "tiles": [{"anchor":[x,y], "dir":{"j","k"}, "chirality", "labels_order"}]}
// Sides may be numbers or exact "p/q" strings; exact values round-trip.

nlohmann::ordered_json spec_to_json(const TileSpec& spec);
TileSpec spec_from_json(const nlohmann::json& j);

nlohmann::ordered_json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::json& j, double eps = -1);

void save_tiling(const Tiling& t, const std::string& path);
Tiling load_tiling(const std::string& path, double eps = -1);

// Report serialization. The shapes below are part of the tool's output
// contract; tests pin them against golden strings, so any field change is
// deliberate and breaks a test first.

nlohmann::ordered_json symlen_to_json(const SymLen& v);
nlohmann::ordered_json zh_report_to_json(const ZhReport& r, const TileSpec& spec);
nlohmann::ordered_json census_to_json(const VertexCensus& c);
nlohmann::ordered_json gamma_graph_to_json(const GammaGraph& g);
nlohmann::ordered_json relation_to_json(const Relation& r);
nlohmann::ordered_json verdict_to_json(const Verdict& v);

// The whole analyze report: census, graph degree tables, relations, verdict.
nlohmann::ordered_json analysis_report_json(const Tiling& t);

}  // namespace tritile
