#pragma once

#include <string>

#include <json.hpp>

#include "gk/dualgraph.hpp"
#include "gk/graph.hpp"
#include "gk/groups.hpp"
#include "gk/realize.hpp"

namespace gk::io {

using json = nlohmann::json;

// {"vertices": ["a", ...], "edges": [["a","b"], ...]}; edges sorted by
// endpoint indices on output, endpoints must be listed vertices on input.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// One edge "u v" per line; isolated vertices as "vertex u".  Labels must be
// whitespace-free.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

std::string graph_to_dot(const Graph& g);

// Sniffs JSON ('{' first) vs edge-list text.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

std::string read_file(const std::string& path);

// {"type": "cyclic"|"product"|"semidirect"|"psl2", ...}
json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const json& j);
GroupSpec load_spec(const std::string& path);

// JSON array of positive integers; validated divisor-closed.
json set_to_json(const DivisorClosedSet& xs);
DivisorClosedSet set_from_json(const json& j);
DivisorClosedSet load_set(const std::string& path);

// {"n": 7, "factors": [{"prime": 2, "exp": 1}, ...]}
json certificate_to_json(const OrderCertificate& cert);
OrderCertificate certificate_from_json(const json& j);

}  // namespace gk::io
