#include "homalg/graph.hpp"

#include <algorithm>
#include <string>

#include "homalg/error.hpp"

namespace homalg {

Graph::Graph(std::size_t order)
    : order_(order), stride_(words_for(order)), adj_(order * words_for(order), 0) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order)
      throw FormatError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") out of range for order " + std::to_string(order));
    g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  bits::set({adj_.data() + u * stride_, stride_}, v);
  bits::set({adj_.data() + v * stride_, stride_}, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  bits::reset({adj_.data() + u * stride_, stride_}, v);
  bits::reset({adj_.data() + v * stride_, stride_}, u);
}

std::size_t Graph::loop_count() const {
  std::size_t c = 0;
  for (Vertex v = 0; v < order_; ++v) c += has_loop(v);
  return c;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < order_; ++v) total += degree(v);
  const std::size_t loops = loop_count();
  return (total - loops) / 2 + loops;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u)
    bits::for_each(row(u), [&](std::size_t v) {
      if (v >= u) out.emplace_back(u, v);
    });
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      bits::for_each(g.row(v), [&](std::size_t u) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace homalg
