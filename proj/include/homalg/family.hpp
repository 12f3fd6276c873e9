#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "homalg/graph.hpp"

namespace homalg {

namespace family {
/// K_q on 0..q-1.
struct Complete { std::size_t q; };
/// K_{a,b}: side A is 0..a-1, side B is a..a+b-1.
struct CompleteBipartite { std::size_t a, b; };
/// C_n with edges i ~ i+1 mod n; n >= 3.
struct Cycle { std::size_t n; };
/// l_k: k isolated looped vertices.
struct LoopedPoints { std::size_t k; };
/// E_n: n isolated vertices, n >= 0.
struct Empty { std::size_t n; };
/// One edge 0-1 with a loop on 0; hom(G, .) counts independent sets of G.
struct IndependentSetGraph {};
/// Looped path 0-1-2.
struct WidomRowlinson {};
}  // namespace family

using FamilyId = std::variant<family::Complete, family::CompleteBipartite, family::Cycle,
                              family::LoopedPoints, family::Empty, family::IndependentSetGraph,
                              family::WidomRowlinson>;

/// Throws ParameterError on invalid parameters.
Graph make_family(const FamilyId& id);
std::string family_name(const FamilyId& id);

inline Graph complete(std::size_t q) { return make_family(family::Complete{q}); }
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  return make_family(family::CompleteBipartite{a, b});
}
inline Graph cycle(std::size_t n) { return make_family(family::Cycle{n}); }
inline Graph looped_points(std::size_t k) { return make_family(family::LoopedPoints{k}); }
inline Graph empty_graph(std::size_t n) { return make_family(family::Empty{n}); }
inline Graph independent_set_graph() { return make_family(family::IndependentSetGraph{}); }
inline Graph widom_rowlinson() { return make_family(family::WidomRowlinson{}); }

/// Path on n >= 1 vertices 0-1-...-(n-1), no loops.
Graph path(std::size_t n);

}  // namespace homalg
