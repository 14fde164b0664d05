#pragma once

#include <json.hpp>

#include "heronfrieze/frieze.hpp"
#include "heronfrieze/geometry.hpp"
#include "heronfrieze/laurent.hpp"
#include "heronfrieze/triangulation.hpp"

namespace hfcli {

using nlohmann::json;

// Every reader throws hf::Error(MalformedInput) on schema mismatches.

// {"vertices": [["p/q", "p/q"], ...]}
json to_json(const hf::Polygon& poly);
hf::Polygon polygon_from_json(const json& j);
json float_polygon_to_json(const std::vector<hf::FloatPoint>& pts);

// {"n": 8, "diagonals": [[1, 3], ...]}
json to_json(const hf::TriCycle& g);
hf::TriCycle tricycle_from_json(const json& j);

// {"n": 4, "x": {"1-2": "1", ...}, "s": {"1-2-3": "2", ...}}
json to_json(const hf::MeasurementSet& m);
hf::MeasurementSet measurements_from_json(const json& j);

// {"kind": "heronian" | "cm", "n": 6, "window": [lo, hi],
//  "nodes": {"i2:j2": "p/q", ...}, "lines": {"up:k": "p/q", ...}}
json to_json(const hf::Frieze& z);
hf::Frieze frieze_from_json(const json& j);

// {"nodes": ["i2:j2", ...], "lines": ["up:k", ...], "values": ["1", ...]}.
// Values list node values (the thickened list for a CM path) then lines.
struct PathFile {
  std::vector<hf::NodeIdx> nodes;
  std::vector<hf::LineIdx> lines;
  std::vector<hf::Rat> values;
};
PathFile path_from_json(const json& j);
json to_json(const PathFile& path);
hf::PathValues split_values(const PathFile& path, size_t node_count);

// {"terms": [{"coeff": "-1", "exps": {"x:1-3": -1, "s:1-2-3": 1}}, ...]}
json to_json(const hf::LaurentPoly& p);
hf::LaurentPoly laurent_from_json(const json& j);

// {"i2:j2": "p/q", ...}
hf::Seed seed_from_json(const json& j);

json error_json(const hf::Error& err);

}  // namespace hfcli
