#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// counting, isomorphism, or enumeration code it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homalg/graph.hpp"

namespace homalg::oracle {

using Big = boost::multiprecision::cpp_int;

/// Every map V(g) -> V(h), checked edge by edge.
inline Big hom(const Graph& g, const Graph& h) {
  const std::size_t n = g.order(), m = h.order();
  if (n == 0) return 1;
  if (m == 0) return 0;
  const auto edges = g.edges();
  std::vector<Vertex> f(n, 0);
  Big total = 0;
  for (;;) {
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!h.adjacent(f[u], f[v])) {
        ok = false;
        break;
      }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return total;
  }
}

/// Number of independent sets of a loop-free graph; equals hom(g, H_ind).
inline std::uint64_t independent_sets(const Graph& g) {
  const std::size_t n = g.order();
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) ok = false;
    count += ok;
  }
  return count;
}

/// Some q-subset of distinct vertices is pairwise adjacent.
inline bool clique(const Graph& g, std::size_t q) {
  const std::size_t n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != q) continue;
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Proper q-colourings of C_n: (q-1)^n + (-1)^n (q-1).
inline Big cycle_colorings(std::size_t n, long q) {
  Big p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= (q - 1);
  return n % 2 ? Big(p - (q - 1)) : Big(p + (q - 1));
}

inline bool same_under(const Graph& a, const Graph& b, const std::vector<Vertex>& p) {
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = u; v < a.order(); ++v)
      if (a.adjacent(u, v) != b.adjacent(p[u], p[v])) return false;
  return true;
}

/// Tries all |V|! bijections.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    if (same_under(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), Vertex{0});
  std::uint64_t count = 0;
  do {
    count += same_under(g, g, p);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Labeled d-regular loop-free graphs on n vertices, by filling the adjacency
/// matrix pair by pair with degree bookkeeping.
inline std::uint64_t labeled_regular(std::size_t n, std::size_t d) {
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == pairs.size()) {
      count += std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == d; });
      return;
    }
    const auto [u, v] = pairs[i];
    // u's last chance to gain neighbours is pair (u, n-1).
    if (deg[u] < d && deg[v] < d) {
      ++deg[u], ++deg[v];
      self(self, i + 1);
      --deg[u], --deg[v];
    }
    if (v == n - 1 && deg[u] != d) return;
    self(self, i + 1);
  };
  rec(rec, 0);
  return count;
}

inline Big factorial(std::size_t n) {
  Big f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace homalg::oracle
