#include "homalg/algebra.hpp"

#include <limits>
#include <string>

#include "homalg/error.hpp"
#include "homalg/family.hpp"

namespace homalg {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

PowerVertexCodec::PowerVertexCodec(std::size_t base, std::size_t arity)
    : base_(base), arity_(arity), size_(checked_power(base, arity)) {
  if (size_ == std::numeric_limits<std::uint64_t>::max())
    throw ResourceError(std::to_string(base) + "^" + std::to_string(arity) +
                        " functions do not fit in 64 bits");
}

std::uint64_t PowerVertexCodec::encode(std::span<const Vertex> f) const {
  std::uint64_t index = 0;
  for (std::size_t i = arity_; i-- > 0;) index = index * base_ + f[i];
  return index;
}

std::vector<Vertex> PowerVertexCodec::decode(std::uint64_t index) const {
  std::vector<Vertex> f(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    f[i] = static_cast<Vertex>(index % base_);
    index /= base_;
  }
  return f;
}

Graph tensor(const Graph& a, const Graph& b) {
  const std::size_t nb = b.order();
  Graph out(a.order() * nb);
  for (Vertex i = 0; i < a.order(); ++i)
    bits::for_each(a.row(i), [&](std::size_t i2) {
      if (i2 < i) return;
      for (Vertex j = 0; j < nb; ++j)
        bits::for_each(b.row(j), [&](std::size_t j2) { out.add_edge(i * nb + j, i2 * nb + j2); });
    });
  return out;
}

Graph tensor_power(const Graph& a, std::size_t k) {
  Graph out = looped_points(1);
  for (std::size_t i = 0; i < k; ++i) out = tensor(out, a);
  return out;
}

Graph power(const Graph& a, const Graph& b, std::uint64_t cap) {
  const std::size_t na = a.order(), nb = b.order();
  const std::uint64_t size = checked_power(na, nb);
  if (size > cap)
    throw ResourceError("exponential graph would have " +
                        (size == std::numeric_limits<std::uint64_t>::max()
                             ? std::string("more than 2^64")
                             : std::to_string(size)) +
                        " vertices (cap " + std::to_string(cap) + ")");
  const PowerVertexCodec codec(na, nb);
  Graph out(static_cast<std::size_t>(size));
  if (size == 0) return out;

  // For fixed f1, f2(v) must lie in the intersection of N_a(f1(u)) over all
  // u adjacent to v in b; f2 ranges over the product of those sets.
  std::vector<std::vector<Vertex>> b_nbrs(nb);
  for (Vertex v = 0; v < nb; ++v) b_nbrs[v] = b.neighbors(v);
  std::vector<std::uint64_t> place(nb, 1);
  for (std::size_t v = 1; v < nb; ++v) place[v] = place[v - 1] * na;

  const std::size_t stride = a.row_words();
  std::vector<Word> all(stride);
  bits::fill(all, na);
  std::vector<Word> allowed_bits(stride);
  std::vector<std::vector<Vertex>> allowed(nb);
  std::vector<std::size_t> pos(nb);

  for (std::uint64_t f1 = 0; f1 < size; ++f1) {
    const auto f = codec.decode(f1);
    bool feasible = true;
    for (Vertex v = 0; v < nb && feasible; ++v) {
      allowed_bits = all;
      for (Vertex u : b_nbrs[v])
        if (!bits::and_into(allowed_bits, a.row(f[u]))) {
          feasible = false;
          break;
        }
      allowed[v] = bits::to_indices(allowed_bits);
      if (allowed[v].empty()) feasible = false;
    }
    if (!feasible) continue;
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      std::uint64_t f2 = 0;
      for (Vertex v = 0; v < nb; ++v) f2 += place[v] * allowed[v][pos[v]];
      if (f2 >= f1) out.add_edge(static_cast<Vertex>(f1), static_cast<Vertex>(f2));
      std::size_t v = 0;
      while (v < nb && ++pos[v] == allowed[v].size()) pos[v++] = 0;
      if (v == nb) break;
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.order();
  Graph out(n);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& [u, v] : p.edges()) out.add_edge(offset + u, offset + v);
    offset += p.order();
  }
  return out;
}

Graph copies(const Graph& g, std::size_t k) {
  const std::size_t m = g.order();
  Graph out(m * k);
  const auto edges = g.edges();
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& [u, v] : edges) out.add_edge(c * m + u, c * m + v);
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  return out;
}

Graph loop_all(const Graph& g) {
  Graph out = g;
  for (Vertex v = 0; v < g.order(); ++v) out.add_edge(v, v);
  return out;
}

Graph looped_subgraph(const Graph& g) {
  std::vector<Vertex> looped;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.has_loop(v)) looped.push_back(v);
  return induced_subgraph(g, looped);
}

Graph double_cover(const Graph& g) { return tensor(g, complete(2)); }

}  // namespace homalg
