#include "homalg/predicates.hpp"

#include <queue>

#include "homalg/error.hpp"

namespace homalg {

std::optional<std::vector<std::uint8_t>> is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(n, kUnset);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != kUnset) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        if (side[u] == kUnset) {
          side[u] = side[v] ^ 1;
          q.push(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<std::size_t> regularity(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool has_clique(const Graph& h, std::size_t q) {
  if (q == 0) throw ParameterError("clique size must be >= 1");
  const std::size_t n = h.order();
  if (q > n) return false;
  if (q == 1) return true;
  const std::size_t stride = h.row_words();
  std::vector<Word> cand((q + 1) * stride);
  auto level = [&](std::size_t i) { return std::span<Word>(cand.data() + i * stride, stride); };
  // level(i): vertices above every pick and adjacent to all i picks
  auto grow = [&](auto&& self, std::size_t i) -> bool {
    if (i == q) return true;
    const auto cur = level(i);
    if (bits::count(cur) + i < q) return false;
    for (Vertex v : bits::to_indices(cur)) {
      const auto nxt = level(i + 1);
      bits::assign_and(nxt, cur, h.row(v));
      for (std::size_t w = 0; w <= v / kWordBits; ++w)
        nxt[w] &= (w < v / kWordBits) ? 0 : ~((Word{2} << (v % kWordBits)) - 1);
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  bits::fill(level(0), n);
  return grow(grow, 0);
}

Graph build_hbst(const Graph& h) {
  const std::size_t n = h.order();
  Graph out(n * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex u2 : h.neighbors(u))
      for (Vertex v = 0; v < n; ++v)
        for (Vertex v2 : h.neighbors(v))
          if (!h.adjacent(u, v2) || !h.adjacent(u2, v)) out.add_edge(u * n + v, u2 * n + v2);
  return out;
}

bool zhao_criterion(const Graph& h) { return is_bipartite(build_hbst(h)).has_value(); }

}  // namespace homalg
