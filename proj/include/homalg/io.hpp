#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "homalg/graph.hpp"

namespace homalg {

enum class GraphFormat { EdgeList, Json };

/// Edge list ("order edgecount" then one "u v" per line) or JSON
/// (`{"order": n, "edges": [[u, v], ...]}`); the format is detected from the
/// first non-blank character. Duplicate edges collapse.
Graph parse_graph(std::string_view text);
Graph parse_edge_list(std::string_view text);
Graph parse_json_graph(std::string_view text);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Sorted edges (u <= v); the edge list is newline-terminated.
std::string serialize_graph(const Graph& g, GraphFormat format = GraphFormat::EdgeList);

Graph read_graph_file(const std::string& path);

}  // namespace homalg
