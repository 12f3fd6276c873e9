#include "homalg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "homalg/error.hpp"

namespace homalg {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t to_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw FormatError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  return value;
}

std::pair<std::size_t, std::size_t> pair_line(std::string_view text, std::size_t line) {
  const auto t = tokens(text);
  if (t.size() != 2) throw FormatError("expected two integers", line);
  return {to_index(t[0], line), to_index(t[1], line)};
}

std::size_t first_non_blank(std::string_view text) {
  return text.find_first_not_of(" \t\r\n");
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t lineno = 0, pos = 0;
  bool have_header = false;
  std::size_t order = 0, declared = 0, seen = 0;
  Graph g;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (tokens(line).empty()) continue;
    const auto [a, b] = pair_line(line, lineno);
    if (!have_header) {
      order = a;
      declared = b;
      g = Graph(order);
      have_header = true;
      continue;
    }
    if (a >= order || b >= order)
      throw FormatError("vertex index out of range for order " + std::to_string(order), lineno);
    g.add_edge(a, b);
    ++seen;
  }
  if (!have_header) throw FormatError("missing header line \"order edgecount\"");
  if (seen != declared)
    throw FormatError("header declares " + std::to_string(declared) + " edges but " +
                      std::to_string(seen) + " edge lines follow");
  return g;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
    throw FormatError("graph JSON needs fields \"order\" and \"edges\"");
  const auto& order = j.at("order");
  if (!order.is_number_unsigned()) throw FormatError("\"order\" must be a non-negative integer");
  const auto& edges = j.at("edges");
  if (!edges.is_array()) throw FormatError("\"edges\" must be an array");
  Graph g(order.get<std::size_t>());
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw FormatError("each edge must be a 2-element array of non-negative integers");
    const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
    if (u >= g.order() || v >= g.order()) throw FormatError("edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Graph parse_graph(std::string_view text) {
  const auto first = first_non_blank(text);
  if (first != std::string_view::npos && text[first] == '{') return parse_json_graph(text);
  return parse_edge_list(text);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"order", g.order()}, {"edges", std::move(edges)}};
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Json) return graph_to_json(g).dump();
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace homalg
