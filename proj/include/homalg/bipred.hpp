#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "homalg/algebra.hpp"
#include "homalg/graph.hpp"
#include "homalg/homcount.hpp"

namespace homalg {

/// Why a graph belongs to the class of H with hom(G,H)^2 <= hom(G x K_2, H)
/// for every G. Leaves are "bipartite" or "zhao-criterion"; inner nodes are
/// "tensor-closure", "exponent-closure" (certified H, any A gives H^A) and
/// "bipartite-exponent" (any H, bipartite A gives H^A).
struct Derivation {
  std::string rule;
  Graph graph;
  std::optional<Graph> exponent;
  std::vector<Derivation> premises;

  nlohmann::json to_json() const;
};

struct CertifiedGraph {
  Graph graph;
  Derivation derivation;
};

/// Certificate for a bipartite h, or one passing zhao_criterion.
std::optional<CertifiedGraph> certify_base(const Graph& h);

enum class ClosureKind { TensorOfCertified, PowerOfCertifiedByAny, PowerOfAnyByBipartite };

using ClosureOperand = std::variant<Graph, CertifiedGraph>;

/// TensorOfCertified: two or more operands, each certified (plain graphs go
/// through certify_base). The power kinds take (H, A) and build H^A; for
/// PowerOfCertifiedByAny H must be certifiable, for PowerOfAnyByBipartite A
/// must be bipartite. Violations throw PreconditionError.
CertifiedGraph closure_construct(ClosureKind kind, std::span<const ClosureOperand> parts,
                                 std::uint64_t power_cap = kDefaultPowerCap);

enum class BipRedStatus { NoCounterexample, CounterexampleFound, CertifiedByClosure };
std::string to_string(BipRedStatus s);

struct BipRedVerdict {
  BipRedStatus status = BipRedStatus::NoCounterexample;
  std::size_t limit = 0;
  std::size_t graphs_checked = 0;
  std::optional<Graph> witness;
  HomCount witness_hom;        ///< hom(witness, h)
  HomCount witness_cover_hom;  ///< hom(witness x K_2, h)
  std::optional<Derivation> derivation;

  nlohmann::json to_json() const;
};

/// Tests hom(G,h)^2 <= hom(G x K_2, h) over every graph G (loops allowed) on
/// at most max_source_order <= 8 vertices, up to isomorphism, by increasing
/// order; stops at the first violator. Evidence only.
BipRedVerdict check_bipartite_reducible(const Graph& h, std::size_t max_source_order = 6,
                                        const CountOptions& options = {});

BipRedVerdict certified_verdict(const CertifiedGraph& c);

}  // namespace homalg
