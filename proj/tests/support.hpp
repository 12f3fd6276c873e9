#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "homalg/graph.hpp"

namespace homalg::testing {

using Rng = std::mt19937_64;

/// Each unordered pair is an edge with probability p_edge, each vertex looped with p_loop.
inline Graph random_graph(Rng& rng, std::size_t n, double p_edge = 0.5, double p_loop = 0.5) {
  std::bernoulli_distribution edge(p_edge), loop(p_loop);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    if (loop(rng)) g.add_edge(u, u);
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  }
  return g;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Rejection-samples a connected graph (n >= 1).
inline Graph random_connected_graph(Rng& rng, std::size_t n, double p_edge = 0.5,
                                    double p_loop = 0.5) {
  for (;;) {
    Graph g = random_graph(rng, n, p_edge, p_loop);
    if (is_connected(g)) return g;
  }
}

inline std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace homalg::testing
