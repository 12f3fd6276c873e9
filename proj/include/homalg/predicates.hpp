#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "homalg/graph.hpp"

namespace homalg {

/// side[v] in {0, 1} with no edge inside a side; nullopt for an odd cycle or a
/// loop. Each component's smallest vertex is put on side 0.
std::optional<std::vector<std::uint8_t>> is_bipartite(const Graph& g);

/// d when every vertex has exactly d neighbours (a loop counts once); nullopt
/// for irregular graphs and for E_0.
std::optional<std::size_t> regularity(const Graph& g);

/// q pairwise adjacent distinct vertices; loops are ignored.
bool has_clique(const Graph& h, std::size_t q);

/// Zhao's auxiliary graph on V(h) x V(h), vertex (u, v) = u * |V(h)| + v:
/// (u, v) ~ (u', v') iff uu', vv' in E(h) and (uv' not in E(h) or u'v not in E(h)).
/// The condition is applied to u = u', v = v' as well, which yields loops.
Graph build_hbst(const Graph& h);

/// build_hbst(h) is bipartite.
bool zhao_criterion(const Graph& h);

}  // namespace homalg
