#include "homalg/counterexample.hpp"

#include "homalg/algebra.hpp"
#include "homalg/error.hpp"
#include "homalg/family.hpp"
#include "homalg/io.hpp"
#include "homalg/predicates.hpp"

namespace homalg {
namespace {

struct TargetCounts {
  HomCount g, kdd, kd1;
};

// Counts on kh itself when it exists, otherwise k times the counts on h.
TargetCounts count_on_kh(const CounterexampleCertificate& c, const CountOptions& options) {
  const std::size_t d = c.d;
  if (c.kh)
    return {hom_count(c.g, *c.kh, options), hom_from_complete_bipartite(d, d, *c.kh),
            hom_from_complete(d + 1, *c.kh)};
  const HomCount k = c.k;
  return {k * hom_count(c.g, c.h, options), k * hom_from_complete_bipartite(d, d, c.h),
          k * hom_from_complete(d + 1, c.h)};
}

}  // namespace

bool multiplier_suffices(std::uint64_t k, std::size_t n, std::size_t d, const HomCount& hom_g,
                         const HomCount& hom_kdd) {
  using boost::multiprecision::pow;
  return pow(HomCount(k), 2 * d - n) * pow(hom_g, 2 * d) > pow(hom_kdd, n);
}

std::uint64_t minimal_multiplier(std::size_t n, std::size_t d, const HomCount& hom_g,
                                 const HomCount& hom_kdd) {
  if (n >= 2 * d) throw PreconditionError("need fewer than 2d vertices");
  if (hom_g == 0) throw PreconditionError("need hom(G, H) > 0");
  std::uint64_t hi = 1;
  while (!multiplier_suffices(hi, n, d, hom_g, hom_kdd)) {
    if (hi > (std::uint64_t{1} << 62)) throw ResourceError("multiplier exceeds 2^63");
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;  // fails (or is 0)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (multiplier_suffices(mid, n, d, hom_g, hom_kdd) ? hi : lo) = mid;
  }
  return hi;
}

CounterexampleCertificate build_counterexample(std::size_t d, const Graph& h, const Graph& g,
                                               const CountOptions& options,
                                               std::uint64_t materialize_cap) {
  if (d == 0) throw PreconditionError("d must be positive");
  if (!h.loop_free()) throw PreconditionError("H must be loop-free");
  if (has_clique(h, d + 1))
    throw PreconditionError("H contains a " + std::to_string(d + 1) + "-clique");
  if (!g.loop_free()) throw PreconditionError("G must be loop-free");
  const auto reg = regularity(g);
  if (!reg || *reg != d) throw PreconditionError("G is not " + std::to_string(d) + "-regular");
  if (!is_connected(g)) throw PreconditionError("G is not connected");
  const std::size_t n = g.order();
  if (n >= 2 * d)
    throw PreconditionError("G has " + std::to_string(n) + " >= 2d = " + std::to_string(2 * d) +
                            " vertices");

  CounterexampleCertificate c;
  c.d = d;
  c.g = g;
  c.h = h;
  c.hom_g_h = hom_count(g, h, options);
  if (c.hom_g_h == 0) throw PreconditionError("hom(G, H) = 0");
  c.hom_kdd_h = hom_from_complete_bipartite(d, d, h);
  c.k = minimal_multiplier(n, d, c.hom_g_h, c.hom_kdd_h);
  if (c.kh_order() <= materialize_cap)
    c.kh = tensor(h, looped_points(static_cast<std::size_t>(c.k)));
  const auto counts = count_on_kh(c, options);
  c.hom_g_kh = counts.g;
  c.hom_kdd_kh = counts.kdd;
  c.hom_kd1_kh = counts.kd1;
  c.verdict_kdd = compare_powers(c.hom_g_kh, 2 * d, c.hom_kdd_kh, n);
  c.verdict_kd1 = compare_powers(c.hom_g_kh, d + 1, c.hom_kd1_kh, n);
  if (c.verdict_kdd.relation != Relation::Greater || c.verdict_kd1.relation != Relation::Greater)
    throw Error("assembled target does not violate both bounds");
  return c;
}

nlohmann::json CounterexampleCertificate::to_json() const {
  nlohmann::json j{{"d", d},
                   {"k", std::to_string(k)},
                   {"g", graph_to_json(g)},
                   {"h", graph_to_json(h)},
                   {"kh_order", std::to_string(kh_order())},
                   {"hom_g_h", to_decimal(hom_g_h)},
          {"hom_kdd_h", to_decimal(hom_kdd_h)},
                   {"hom_g_kh", to_decimal(hom_g_kh)},
                   {"hom_kdd_kh", to_decimal(hom_kdd_kh)},
                   {"hom_kd1_kh", to_decimal(hom_kd1_kh)},
                   {"verdict_kdd", homalg::to_json(verdict_kdd)},
                   {"verdict_kd1", homalg::to_json(verdict_kd1)}};
  if (kh) j["kh"] = graph_to_json(*kh);
  return j;
}

CounterexampleCertificate CounterexampleCertificate::from_json(const nlohmann::json& j) {
  try {
    CounterexampleCertificate c;
    c.d = j.at("d").get<std::size_t>();
    c.k = static_cast<std::uint64_t>(parse_decimal(j.at("k").get<std::string>()));
    c.g = graph_from_json(j.at("g"));
    c.h = graph_from_json(j.at("h"));
    if (j.contains("kh")) c.kh = graph_from_json(j.at("kh"));
    c.hom_g_h = parse_decimal(j.at("hom_g_h").get<std::string>());
    c.hom_kdd_h = parse_decimal(j.at("hom_kdd_h").get<std::string>());
    c.hom_g_kh = parse_decimal(j.at("hom_g_kh").get<std::string>());
    c.hom_kdd_kh = parse_decimal(j.at("hom_kdd_kh").get<std::string>());
    c.hom_kd1_kh = parse_decimal(j.at("hom_kd1_kh").get<std::string>());
    c.verdict_kdd = verdict_from_json(j.at("verdict_kdd"));
    c.verdict_kd1 = verdict_from_json(j.at("verdict_kd1"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed certificate: ") + e.what());
  }
}

CertificateCheck verify_certificate(const CounterexampleCertificate& c,
                                    const CountOptions& options) {
  const std::size_t n = c.g.order(), d = c.d;
  if (c.k == 0) return {false, "k must be positive"};
  if (c.kh && *c.kh != tensor(c.h, looped_points(static_cast<std::size_t>(c.k))))
    return {false, "kh is not h x l_k"};
  const auto reg = regularity(c.g);
  if (!c.g.loop_free() || !reg || *reg != d || !is_connected(c.g) || n >= 2 * d)
    return {false, "g is not a connected loop-free d-regular graph on fewer than 2d vertices"};
  if (!c.h.loop_free() || has_clique(c.h, d + 1)) return {false, "h has a loop or a (d+1)-clique"};
  const auto [g_kh, kdd_kh, kd1_kh] = count_on_kh(c, options);
  if (g_kh != c.hom_g_kh || kdd_kh != c.hom_kdd_kh || kd1_kh != c.hom_kd1_kh)
    return {false, "recomputed counts differ from the stored ones"};
  const auto v_kdd = compare_powers(g_kh, 2 * d, kdd_kh, n);
  const auto v_kd1 = compare_powers(g_kh, d + 1, kd1_kh, n);
  if (!(v_kdd == c.verdict_kdd) || !(v_kd1 == c.verdict_kd1))
    return {false, "recomputed verdicts differ from the stored ones"};
  if (v_kdd.relation != Relation::Greater || v_kd1.relation != Relation::Greater)
    return {false, "a bound is not violated"};
  return {true, "both bounds violated strictly"};
}

Graph default_counterexample_source(std::size_t d) {
  if (d < 7) throw ParameterError("the default construction C_{d-2} + C_{d-2} needs d >= 7");
  return join(cycle(d - 2), cycle(d - 2));
}

Graph build_connected_counterexample(const Graph& h, std::size_t k, std::size_t d) {
  if (!is_connected(h) || h.order() == 0) throw PreconditionError("H must be connected");
  if (k < 2) throw PreconditionError("need k >= 2 copies");
  if (d == 0) throw PreconditionError("d must be positive");
  const std::size_t m = h.order(), inner = 2 * d - 1;
  Graph out(k * m + k * (k - 1) / 2 * inner);
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& [u, v] : h.edges()) out.add_edge(c * m + u, c * m + v);
  std::size_t next = k * m;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vertex prev = i * m;
      for (std::size_t s = 0; s < inner; ++s) {
        out.add_edge(prev, next);
        prev = next++;
      }
      out.add_edge(prev, j * m);
    }
  return out;
}

}  // namespace homalg
