#include "homalg/verdict.hpp"

#include "homalg/error.hpp"
#include "homalg/predicates.hpp"

namespace homalg {
namespace {

std::size_t require_regular(const Graph& g, std::size_t min_degree) {
  if (!g.loop_free()) throw PreconditionError("source graph must be loop-free");
  const auto d = regularity(g);
  if (!d) throw PreconditionError("source graph is not regular");
  if (*d < min_degree)
    throw PreconditionError("source graph must be d-regular with d >= " +
                            std::to_string(min_degree));
  return *d;
}

}  // namespace

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "strict-less";
    case Relation::Equal: return "equal";
    case Relation::Greater: return "strict-greater";
  }
  return "equal";
}

Relation parse_relation(const std::string& s) {
  if (s == "strict-less") return Relation::Less;
  if (s == "equal") return Relation::Equal;
  if (s == "strict-greater") return Relation::Greater;
  throw FormatError("unknown relation '" + s + "'");
}

InequalityVerdict compare_powers(const HomCount& lhs_base, std::size_t lhs_exponent,
                                 const HomCount& rhs_base, std::size_t rhs_exponent) {
  InequalityVerdict v;
  v.exponent_clearing = lhs_exponent;
  v.rhs_exponent = rhs_exponent;
  v.lhs_witness = boost::multiprecision::pow(lhs_base, lhs_exponent);
  v.rhs_witness = boost::multiprecision::pow(rhs_base, rhs_exponent);
  v.relation = v.lhs_witness < v.rhs_witness   ? Relation::Less
               : v.lhs_witness == v.rhs_witness ? Relation::Equal
                                                : Relation::Greater;
  return v;
}

nlohmann::json to_json(const InequalityVerdict& v) {
  return {{"relation", to_string(v.relation)},
          {"lhs_witness", to_decimal(v.lhs_witness)},
          {"rhs_witness", to_decimal(v.rhs_witness)},
          {"exponent_clearing", v.exponent_clearing},
          {"rhs_exponent", v.rhs_exponent}};
}

InequalityVerdict verdict_from_json(const nlohmann::json& j) {
  try {
    InequalityVerdict v;
    v.relation = parse_relation(j.at("relation").get<std::string>());
    v.lhs_witness = parse_decimal(j.at("lhs_witness").get<std::string>());
    v.rhs_witness = parse_decimal(j.at("rhs_witness").get<std::string>());
    v.exponent_clearing = j.at("exponent_clearing").get<std::size_t>();
    v.rhs_exponent = j.at("rhs_exponent").get<std::size_t>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed verdict: ") + e.what());
  }
}

ConjectureVerdict conjecture_verdict(const Graph& g, const Graph& h, const CountOptions& options) {
  const std::size_t d = require_regular(g, 1);
  ConjectureVerdict out;
  out.n = g.order();
  out.d = d;
  out.hom_g = hom_count(g, h, options);
  out.hom_kdd = hom_from_complete_bipartite(d, d, h);
  out.hom_kd1 = hom_from_complete(d + 1, h);
  out.kdd = compare_powers(out.hom_g, 2 * d, out.hom_kdd, out.n);
  out.kd1 = compare_powers(out.hom_g, d + 1, out.hom_kd1, out.n);
  return out;
}

InequalityVerdict clique_bound_verdict(const Graph& g, const Graph& t, const CountOptions& options) {
  const std::size_t d = require_regular(g, 0);
  return compare_powers(hom_count(g, t, options), d + 1, hom_from_complete(d + 1, t), g.order());
}

Graph wr_target(const Graph& h, const Graph& b, std::uint64_t power_cap) {
  if (!is_bipartite(b)) throw PreconditionError("exponent graph b must be bipartite");
  return looped_subgraph(power(h, b, power_cap));
}

InequalityVerdict wr_verdict(const Graph& g, const Graph& h, const Graph& b,
                             std::uint64_t power_cap, const CountOptions& options) {
  require_regular(g, 0);
  return clique_bound_verdict(g, wr_target(h, b, power_cap), options);
}

}  // namespace homalg
