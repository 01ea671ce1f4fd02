#pragma once

#include "pentact/orientation.hpp"
#include "pentact/q5.hpp"
#include "pentact/system.hpp"
#include "pentact/triangulation.hpp"

#include "json.hpp"

#include <string>

namespace pentact {

// {"a": "p/q", "b": "r/s"}
nlohmann::json q5_to_json(const Q5& x);
Q5 q5_from_json(const nlohmann::json& j);

// Graph files: {"outer": [5 ids], "edges": [[u, v], ...], "rotations": {"id": [ids...]}}
// Ids are arbitrary integers. Rotations are optional, clockwise.
GraphInput graph_input_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Triangulation& t);
Triangulation load_graph(const std::string& path);

// arcs use vertex labels: [{"from": u, "to": v, "color": c}, ...]
nlohmann::json forest_to_json(const Triangulation& t, const FiveColorForest& f);
FiveColorForest forest_from_json(const Triangulation& t, const nlohmann::json& j);

nlohmann::json orientation_to_json(const StackExtension& se, const Alpha5Orientation& x);

nlohmann::json solution_to_json(const Skeleton& s, const std::vector<Q5>& sol);
nlohmann::json trace_to_json(const IterateResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pentact
