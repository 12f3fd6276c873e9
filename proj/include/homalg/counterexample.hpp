#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "homalg/graph.hpp"
#include "homalg/homcount.hpp"
#include "homalg/verdict.hpp"

namespace homalg {

/// Largest kh (in vertices) kept as an explicit graph. A dense 40000-vertex
/// matrix is about 200 MB.
inline constexpr std::uint64_t kDefaultMaterializeCap = 40'000;

/// A d-regular g and a target kh = h x l_k on which both bounds of the
/// max{K_{d,d}, K_{d+1}} conjecture fail strictly.
///
/// kh is only materialized up to a size cap. Beyond it the kh counts use
/// hom(F, kh) = k * hom(F, h), exact for the connected sources F used here.
struct CounterexampleCertificate {
  std::size_t d = 0;
  std::uint64_t k = 0;
  Graph g, h;
  std::optional<Graph> kh;
  HomCount hom_g_h, hom_kdd_h;
  HomCount hom_g_kh, hom_kdd_kh, hom_kd1_kh;
  InequalityVerdict verdict_kdd;  ///< hom(g,kh)^(2d) vs hom(K_{d,d},kh)^n
  InequalityVerdict verdict_kd1;  ///< hom(g,kh)^(d+1) vs hom(K_{d+1},kh)^n

  std::uint64_t kh_order() const { return k * h.order(); }

  /// Graphs in the JSON graph format; counts and k as decimal strings.
  nlohmann::json to_json() const;
  static CounterexampleCertificate from_json(const nlohmann::json& j);
};

/// k^(2d-n) * hom_g^(2d) > hom_kdd^n, i.e. k * hom(g,h) beats
/// (k * hom(K_{d,d},h))^(n/2d) for connected g.
bool multiplier_suffices(std::uint64_t k, std::size_t n, std::size_t d, const HomCount& hom_g,
                         const HomCount& hom_kdd);

/// Smallest k >= 1 with multiplier_suffices, by doubling then bisection.
/// Requires n < 2d and hom_g > 0.
std::uint64_t minimal_multiplier(std::size_t n, std::size_t d, const HomCount& hom_g,
                                 const HomCount& hom_kdd);

/// Requires h loop-free without a (d+1)-clique; g connected, loop-free,
/// d-regular, fewer than 2d vertices, hom(g, h) > 0. Each violated condition
/// raises its own PreconditionError.
CounterexampleCertificate build_counterexample(
    std::size_t d, const Graph& h, const Graph& g, const CountOptions& options = {},
    std::uint64_t materialize_cap = kDefaultMaterializeCap);

struct CertificateCheck {
  bool ok = false;
  std::string message;
};

/// Recomputes every count from the embedded graphs (checking kh = h x l_k
/// when kh is present) and compares with the stored values and verdicts.
CertificateCheck verify_certificate(const CounterexampleCertificate& c,
                                    const CountOptions& options = {});

/// join(C_{d-2}, C_{d-2}) for d >= 7 (d-regular on 2d-4 vertices, 6-colourable).
Graph default_counterexample_source(std::size_t d);

/// k copies of connected h (copy c on c*|h| .. (c+1)*|h|-1) plus, for every
/// pair i < j of copies, a path of 2d edges between their vertex-0 roots whose
/// 2d-1 inner vertices follow the copies, pairs in lexicographic order, inner
/// vertices listed from copy i towards copy j.
Graph build_connected_counterexample(const Graph& h, std::size_t k, std::size_t d);

}  // namespace homalg
