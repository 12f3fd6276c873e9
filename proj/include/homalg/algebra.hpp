#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "homalg/graph.hpp"

namespace homalg {

/// Largest exponential graph power() will materialize. The adjacency is a
/// dense bit matrix, so 2^16 vertices is already 512 MiB.
inline constexpr std::uint64_t kDefaultPowerCap = std::uint64_t{1} << 16;

/// Maps a function f: V(B) -> V(A) to sum_i f(i) * |V(A)|^i.
class PowerVertexCodec {
public:
  /// Throws ResourceError if base^arity does not fit in 64 bits.
  PowerVertexCodec(std::size_t base, std::size_t arity);

  std::size_t base() const noexcept { return base_; }
  std::size_t arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t encode(std::span<const Vertex> f) const;
  std::vector<Vertex> decode(std::uint64_t index) const;

private:
  std::size_t base_;
  std::size_t arity_;
  std::uint64_t size_;
};

/// |base|^exponent, or nullopt-like UINT64_MAX when it overflows.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent);

/// Tensor (categorical) product; vertex (i, j) is i * |V(b)| + j.
Graph tensor(const Graph& a, const Graph& b);

/// a x a x ... x a (k factors); k = 0 gives l_1.
Graph tensor_power(const Graph& a, std::size_t k);

/// Exponential graph a^b: vertices are functions V(b) -> V(a) under
/// PowerVertexCodec; f1 ~ f2 iff f1(u) ~ f2(v) in a for every ordered pair
/// (u, v) with uv an edge of b. Throws ResourceError above `cap` vertices.
Graph power(const Graph& a, const Graph& b, std::uint64_t cap = kDefaultPowerCap);

/// b's vertices are shifted by |V(a)|.
Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_union(std::span<const Graph> parts);

/// k disjoint copies of g; copy c occupies c*|V(g)| .. (c+1)*|V(g)|-1.
Graph copies(const Graph& g, std::size_t k);

/// Disjoint union plus every edge between V(a) and V(b).
Graph join(const Graph& a, const Graph& b);

/// G°: a loop on every vertex.
Graph loop_all(const Graph& g);

/// l(G): induced subgraph on looped vertices, relabeled in increasing order.
Graph looped_subgraph(const Graph& g);

/// G x K_2; vertex (v, s) is 2v + s.
Graph double_cover(const Graph& g);

}  // namespace homalg
