#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "homalg/graph.hpp"

namespace homalg {

/// Exact homomorphism count. Never negative; hom(E_0, H) = 1.
using HomCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const HomCount& c) { return c.str(); }
/// Throws FormatError unless `s` is a non-empty string of decimal digits.
HomCount parse_decimal(const std::string& s);

inline constexpr std::uint64_t kDefaultOracleCap = 100'000'000;

/// Enumerates all |V(h)|^|V(g)| vertex maps and checks every edge.
/// Throws ResourceError when that exceeds `cap`.
HomCount hom_bruteforce(const Graph& g, const Graph& h, std::uint64_t cap = kDefaultOracleCap);

struct CountOptions {
  /// Worker threads splitting the root vertex's candidates; results do not
  /// depend on this.
  unsigned parallelism = 1;
};

/// Backtracking counter. Factors over components of g, and for each
/// connected component sums over components of h; repeated components
/// (identical after relabeling) are counted once.
HomCount hom_count(const Graph& g, const Graph& h, const CountOptions& options = {});

/// hom(K_{a,b}, h) = sum over S subset of V(h) of surj(a, |S|) * |CN(S)|^b,
/// where CN(S) is the common neighbourhood. Requires a, b >= 1.
HomCount hom_from_complete_bipartite(std::size_t a, std::size_t b, const Graph& h);

/// hom(K_q, h): ordered q-tuples that are pairwise adjacent (a repeated entry
/// needs a loop). Requires q >= 1.
HomCount hom_from_complete(std::size_t q, const Graph& h);

/// Number of looped vertices; for h^g this equals hom(g, h).
HomCount count_loops(const Graph& g);

/// Number of surjections from an a-set onto an s-set.
HomCount surjections(std::size_t a, std::size_t s);

}  // namespace homalg
