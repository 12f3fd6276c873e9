#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homalg/graph.hpp"

namespace homalg {

inline constexpr std::size_t kDefaultIsoCap = 16;

/// Upper triangle (diagonal included, row-major) of the adjacency matrix under
/// the lexicographically smallest relabeling found by the search. Equal forms
/// iff isomorphic graphs, loops included.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<std::uint8_t> bits;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

  /// "<order>:<hex of bits>", stable across platforms.
  std::string id() const;
};

/// Throws ResourceError when g.order() > max_order.
CanonicalForm canonical_form(const Graph& g, std::size_t max_order = kDefaultIsoCap);

/// The relabeling realizing canonical_form: perm[v] is v's canonical position.
std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t max_order = kDefaultIsoCap);

struct Canonicalization {
  CanonicalForm form;
  std::vector<Vertex> labeling;
};
/// Both of the above from one search.
Canonicalization canonicalize(const Graph& g, std::size_t max_order = kDefaultIsoCap);

/// Direct search for an isomorphism with joint colour refinement; agrees with
/// comparing canonical forms. Throws ResourceError above max_order.
bool is_isomorphic(const Graph& a, const Graph& b, std::size_t max_order = kDefaultIsoCap);

/// An isomorphism a -> b (map[v] in V(b)) if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                     std::size_t max_order = kDefaultIsoCap);

/// Stable colour refinement starting from `colors`; colours are renumbered
/// 0..k-1 by sorted signature, so the result is labeling-invariant.
std::vector<std::size_t> refine_colors(const Graph& g, std::vector<std::size_t> colors);

}  // namespace homalg
