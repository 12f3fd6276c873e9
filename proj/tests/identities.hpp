#pragma once

// Random instances of the exponent/tensor identities. Each generator returns
// both sides; the caller decides how to compare them.

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/family.hpp"
#include "homalg/predicates.hpp"
#include "support.hpp"

namespace homalg::testing {

struct IdentityCase {
  Graph lhs, rhs;
  // Operands, kept for failure messages.
  std::vector<Graph> operands;
};

struct Identity {
  std::string name;
  std::function<IdentityCase(Rng&)> sample;
};

/// Vertex budget for identity sides; keeps isomorphism checks fast.
inline constexpr std::uint64_t kIdentityBudget = 512;

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) { return checked_power(b, e); }

// Draws orders from [lo, hi] until fits() accepts them.
template <std::size_t N, class F>
std::array<std::size_t, N> sample_orders(Rng& rng, std::size_t lo, std::size_t hi, F fits) {
  for (;;) {
    std::array<std::size_t, N> o{};
    for (auto& x : o) x = uniform(rng, lo, hi);
    if (fits(o)) return o;
  }
}

/// Freshman's Dream padding: |A u B|^|C| - |A|^|C| - |B|^|C|.
inline std::size_t freshman_padding(std::size_t a, std::size_t b, std::size_t c) {
  return ipow(a + b, c) - ipow(a, c) - ipow(b, c);
}

inline IdentityCase freshman_case(const Graph& a, const Graph& b, const Graph& c) {
  const std::size_t n = freshman_padding(a.order(), b.order(), c.order());
  const std::vector<Graph> parts{power(a, c), power(b, c), empty_graph(n)};
  return {power(disjoint_union(a, b), c), disjoint_union(parts), {a, b, c}};
}

/// The nine isomorphism identities of tensor products and exponents.
/// `connected_exponent` draws the exponent graph C for Freshman's Dream.
inline std::vector<Identity> identity_suite(
    std::function<Graph(Rng&, std::size_t)> connected_exponent = [](Rng& r, std::size_t n) {
      return random_connected_graph(r, n);
    }) {
  std::vector<Identity> s;
  s.push_back({"AxB = BxA", [](Rng& r) {
                 const Graph a = random_graph(r, uniform(r, 1, 6)),
                             b = random_graph(r, uniform(r, 1, 6));
                 return IdentityCase{tensor(a, b), tensor(b, a), {a, b}};
               }});
  s.push_back({"Ax(BxC) = (AxB)xC", [](Rng& r) {
                 const auto o = sample_orders<3>(r, 1, 6, [](auto o) {
                   return o[0] * o[1] * o[2] <= kIdentityBudget;
                 });
                 const Graph a = random_graph(r, o[0]), b = random_graph(r, o[1]),
                             c = random_graph(r, o[2]);
                 return IdentityCase{tensor(a, tensor(b, c)), tensor(tensor(a, b), c), {a, b, c}};
               }});
  s.push_back({"Ax(BuC) = AxB u AxC", [](Rng& r) {
                 const Graph a = random_graph(r, uniform(r, 1, 6)),
                             b = random_graph(r, uniform(r, 0, 6)),
                             c = random_graph(r, uniform(r, 0, 6));
                 return IdentityCase{tensor(a, disjoint_union(b, c)),
                                     disjoint_union(tensor(a, b), tensor(a, c)), {a, b, c}};
               }});
  s.push_back({"(A^B)^C = A^(BxC)", [](Rng& r) {
                 const auto o = sample_orders<3>(r, 1, 4, [](auto o) {
                   return ipow(o[0], o[1] * o[2]) <= kIdentityBudget;
                 });
                 const Graph a = random_graph(r, o[0]), b = random_graph(r, o[1]),
                             c = random_graph(r, o[2]);
                 return IdentityCase{power(power(a, b), c), power(a, tensor(b, c)), {a, b, c}};
               }});
  s.push_back({"(AxB)^C = A^C x B^C", [](Rng& r) {
                 const auto o = sample_orders<3>(r, 1, 4, [](auto o) {
                   return ipow(o[0] * o[1], o[2]) <= kIdentityBudget;
                 });
                 const Graph a = random_graph(r, o[0]), b = random_graph(r, o[1]),
                             c = random_graph(r, o[2]);
                 return IdentityCase{power(tensor(a, b), c), tensor(power(a, c), power(b, c)),
                                     {a, b, c}};
               }});
  s.push_back({"A^B x A^C = A^(BuC)", [](Rng& r) {
                 const auto o = sample_orders<3>(r, 1, 4, [](auto o) {
                   return ipow(o[0], o[1] + o[2]) <= kIdentityBudget;
                 });
                 const Graph a = random_graph(r, o[0]), b = random_graph(r, o[1]),
                             c = random_graph(r, o[2]);
                 return IdentityCase{tensor(power(a, b), power(a, c)),
                                     power(a, disjoint_union(b, c)), {a, b, c}};
               }});
  s.push_back({"A x ... x A = A^(l_k)", [](Rng& r) {
                 const auto o = sample_orders<2>(r, 1, 4, [](auto o) {
                   return ipow(o[0], o[1]) <= kIdentityBudget;
                 });
                 const Graph a = random_graph(r, o[0]);
                 return IdentityCase{tensor_power(a, o[1]), power(a, looped_points(o[1])), {a}};
               }});
  s.push_back({"kA = A x l_k", [](Rng& r) {
                 const Graph a = random_graph(r, uniform(r, 0, 6));
                 const std::size_t k = uniform(r, 1, 4);
                 return IdentityCase{copies(a, k), tensor(a, looped_points(k)), {a}};
               }});
  s.push_back({"(AuB)^C = A^C u B^C u E_n", [connected_exponent](Rng& r) {
                 const auto o = sample_orders<3>(r, 1, 4, [](auto o) {
                   return ipow(o[0] + o[1], o[2]) <= kIdentityBudget;
                 });
                 return freshman_case(random_graph(r, o[0]), random_graph(r, o[1]),
                                      connected_exponent(r, o[2]));
               }});
  return s;
}

/// Connected C with an odd closed walk (a loop or an odd cycle).
inline Graph random_connected_nonbipartite(Rng& r, std::size_t n) {
  for (;;) {
    Graph c = random_connected_graph(r, n);
    if (!is_bipartite(c)) return c;
  }
}

}  // namespace homalg::testing
