#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "homalg/bits.hpp"

namespace homalg {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected graph on vertices 0..order-1. Loops allowed, multi-edges are not.
///
/// Adjacency is a dense symmetric bit matrix; row v holds N(v), which contains
/// v itself exactly when v is looped. A loop counts once toward degree(v).
/// Graphs are plain values: every operation in this library returns a new one.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Throws FormatError if an endpoint is out of range.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t row_words() const noexcept { return stride_; }

  bool adjacent(Vertex u, Vertex v) const { return bits::test(row(u), v); }
  bool has_loop(Vertex v) const { return adjacent(v, v); }
  std::span<const Word> row(Vertex v) const { return {adj_.data() + v * stride_, stride_}; }

  std::size_t degree(Vertex v) const { return bits::count(row(v)); }
  std::size_t edge_count() const;
  std::size_t loop_count() const;
  bool loop_free() const { return loop_count() == 0; }

  /// Edges with u <= v, sorted lexicographically; loops appear as (v, v).
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const { return bits::to_indices(row(v)); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool operator==(const Graph& other) const = default;

private:
  std::size_t order_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> adj_;
};

/// Induced subgraph on `vertices`, relabeled 0.. in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..order-1.
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Loop-free complement: distinct u, v adjacent iff not adjacent in g.
Graph complement(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace homalg
