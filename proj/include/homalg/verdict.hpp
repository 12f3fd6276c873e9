#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "homalg/algebra.hpp"
#include "homalg/graph.hpp"
#include "homalg/homcount.hpp"

namespace homalg {

enum class Relation { Less, Equal, Greater };

/// "strict-less", "equal", "strict-greater".
std::string to_string(Relation r);
Relation parse_relation(const std::string& s);

/// Exact outcome of lhs <= rhs^(p/q) decided as lhs^q vs rhs^p.
struct InequalityVerdict {
  Relation relation = Relation::Equal;
  HomCount lhs_witness;            ///< lhs_base ^ exponent_clearing
  HomCount rhs_witness;            ///< rhs_base ^ rhs_exponent
  std::size_t exponent_clearing = 1;
  std::size_t rhs_exponent = 1;

  bool holds() const { return relation != Relation::Greater; }
  bool operator==(const InequalityVerdict&) const = default;
};

InequalityVerdict compare_powers(const HomCount& lhs_base, std::size_t lhs_exponent,
                                 const HomCount& rhs_base, std::size_t rhs_exponent);

nlohmann::json to_json(const InequalityVerdict& v);
InequalityVerdict verdict_from_json(const nlohmann::json& j);

/// Both comparisons of hom(G, H) with max{hom(K_{d,d}, H)^(n/2d), hom(K_{d+1}, H)^(n/(d+1))}.
struct ConjectureVerdict {
  std::size_t n = 0, d = 0;
  HomCount hom_g, hom_kdd, hom_kd1;
  InequalityVerdict kdd;  ///< hom_g^(2d) vs hom_kdd^n
  InequalityVerdict kd1;  ///< hom_g^(d+1) vs hom_kd1^n
};

/// Requires g loop-free and d-regular with d >= 1 (PreconditionError otherwise).
ConjectureVerdict conjecture_verdict(const Graph& g, const Graph& h,
                                     const CountOptions& options = {});

/// hom(g, t)^(d+1) vs hom(K_{d+1}, t)^n for loop-free d-regular g.
InequalityVerdict clique_bound_verdict(const Graph& g, const Graph& t,
                                       const CountOptions& options = {});

/// clique_bound_verdict against t = l(h^b); b must be bipartite.
InequalityVerdict wr_verdict(const Graph& g, const Graph& h, const Graph& b,
                             std::uint64_t power_cap = kDefaultPowerCap,
                             const CountOptions& options = {});

/// l(h^b) after checking that b is bipartite.
Graph wr_target(const Graph& h, const Graph& b, std::uint64_t power_cap = kDefaultPowerCap);

}  // namespace homalg
