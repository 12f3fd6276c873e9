#include "homalg/bipred.hpp"

#include <map>
#include <mutex>

#include "homalg/enumerate.hpp"
#include "homalg/error.hpp"
#include "homalg/io.hpp"
#include "homalg/predicates.hpp"

namespace homalg {
namespace {

const std::vector<std::vector<Graph>>& all_graphs_up_to(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::vector<Graph>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_graphs(n, true)).first;
  return it->second;
}

CertifiedGraph as_certified(const ClosureOperand& op, const char* role) {
  if (const auto* c = std::get_if<CertifiedGraph>(&op)) return *c;
  auto base = certify_base(std::get<Graph>(op));
  if (!base)
    throw PreconditionError(std::string(role) +
                            " is neither bipartite nor passes Zhao's criterion, and no "
                            "certificate was supplied");
  return *std::move(base);
}

const Graph& graph_of(const ClosureOperand& op) {
  if (const auto* c = std::get_if<CertifiedGraph>(&op)) return c->graph;
  return std::get<Graph>(op);
}

}  // namespace

nlohmann::json Derivation::to_json() const {
  nlohmann::json j{{"rule", rule}, {"graph", graph_to_json(graph)}};
  if (exponent) j["exponent"] = graph_to_json(*exponent);
  if (!premises.empty()) {
    j["premises"] = nlohmann::json::array();
    for (const auto& p : premises) j["premises"].push_back(p.to_json());
  }
  return j;
}

std::optional<CertifiedGraph> certify_base(const Graph& h) {
  if (is_bipartite(h)) return CertifiedGraph{h, {"bipartite", h, std::nullopt, {}}};
  if (zhao_criterion(h)) return CertifiedGraph{h, {"zhao-criterion", h, std::nullopt, {}}};
  return std::nullopt;
}

CertifiedGraph closure_construct(ClosureKind kind, std::span<const ClosureOperand> parts,
                                 std::uint64_t power_cap) {
  switch (kind) {
    case ClosureKind::TensorOfCertified: {
      if (parts.size() < 2) throw PreconditionError("tensor closure needs at least two operands");
      CertifiedGraph acc = as_certified(parts[0], "operand 1");
      for (std::size_t i = 1; i < parts.size(); ++i) {
        CertifiedGraph next = as_certified(parts[i], ("operand " + std::to_string(i + 1)).c_str());
        Graph g = tensor(acc.graph, next.graph);
        Derivation d{"tensor-closure", g, std::nullopt, {acc.derivation, next.derivation}};
        acc = {std::move(g), std::move(d)};
      }
      return acc;
    }
    case ClosureKind::PowerOfCertifiedByAny: {
      if (parts.size() != 2) throw PreconditionError("exponent closure takes (H, A)");
      CertifiedGraph base = as_certified(parts[0], "base H");
      const Graph& a = graph_of(parts[1]);
      Graph g = power(base.graph, a, power_cap);
      Derivation d{"exponent-closure", g, a, {base.derivation}};
      return {std::move(g), std::move(d)};
    }
    case ClosureKind::PowerOfAnyByBipartite: {
      if (parts.size() != 2) throw PreconditionError("bipartite exponent closure takes (H, A)");
      const Graph& h = graph_of(parts[0]);
      const Graph& a = graph_of(parts[1]);
      if (!is_bipartite(a)) throw PreconditionError("exponent A must be bipartite");
      Graph g = power(h, a, power_cap);
      Derivation d{"bipartite-exponent", g, a, {}};
      return {std::move(g), std::move(d)};
    }
  }
  throw PreconditionError("unknown closure kind");
}

std::string to_string(BipRedStatus s) {
  switch (s) {
    case BipRedStatus::NoCounterexample: return "no-counterexample-up-to-limit";
    case BipRedStatus::CounterexampleFound: return "counterexample-found";
    case BipRedStatus::CertifiedByClosure: return "certified-by-closure";
  }
  return "";
}

nlohmann::json BipRedVerdict::to_json() const {
  nlohmann::json j{{"status", to_string(status)},
                   {"limit", limit},
                   {"graphs_checked", graphs_checked}};
  if (witness) {
    j["witness"] = graph_to_json(*witness);
    j["hom_witness"] = to_decimal(witness_hom);
    j["hom_witness_double_cover"] = to_decimal(witness_cover_hom);
  }
  if (derivation) j["derivation"] = derivation->to_json();
  return j;
}

BipRedVerdict check_bipartite_reducible(const Graph& h, std::size_t max_source_order,
                                        const CountOptions& options) {
  if (max_source_order > 8)
    throw ParameterError("bipartite-reducibility search supports source order <= 8");
  BipRedVerdict v;
  v.limit = max_source_order;
  for (const auto& level : all_graphs_up_to(max_source_order))
    for (const auto& g : level) {
      ++v.graphs_checked;
      const HomCount a = hom_count(g, h, options);
      if (a == 0) continue;
      const HomCount b = hom_count(double_cover(g), h, options);
      if (a * a > b) {
        v.status = BipRedStatus::CounterexampleFound;
        v.witness = g;
        v.witness_hom = a;
        v.witness_cover_hom = b;
        return v;
      }
    }
  return v;
}

BipRedVerdict certified_verdict(const CertifiedGraph& c) {
  BipRedVerdict v;
  v.status = BipRedStatus::CertifiedByClosure;
  v.derivation = c.derivation;
  return v;
}

}  // namespace homalg
