#include <doctest.h>

#include "homalg/algebra.hpp"
#include "homalg/enumerate.hpp"
#include "homalg/error.hpp"
#include "homalg/family.hpp"
#include "homalg/homcount.hpp"
#include "homalg/iso.hpp"
#include "homalg/predicates.hpp"
#include "identities.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace homalg;
using testing::Rng;

namespace {

bool iso(const Graph& a, const Graph& b) {
  return is_isomorphic(a, b, std::max<std::size_t>({a.order(), b.order(), 1}));
}

Graph two_edges() { return copies(complete(2), 2); }

}  // namespace

TEST_CASE("power vertex codec is a mixed-radix bijection") {
  const PowerVertexCodec codec(3, 4);
  CHECK(codec.size() == 81);
  for (std::uint64_t i = 0; i < codec.size(); ++i) CHECK(codec.encode(codec.decode(i)) == i);
  const std::vector<Vertex> f{2, 0, 1, 0};
  CHECK(codec.encode(f) == 2 + 0 * 3 + 1 * 9 + 0 * 27);
  CHECK(PowerVertexCodec(5, 0).size() == 1);
  CHECK(checked_power(2, 64) == UINT64_MAX);
  CHECK(checked_power(10, 6) == 1'000'000);
}

TEST_CASE("tensor product") {
  CHECK(tensor(complete(2), cycle(3)).order() == 6);
  // (i, j) sits at i*|b| + j.
  const Graph t = tensor(independent_set_graph(), complete(2));
  CHECK(t.adjacent(0 * 2 + 0, 1 * 2 + 1));
  CHECK(t.adjacent(0 * 2 + 0, 0 * 2 + 1));
  CHECK_FALSE(t.adjacent(1 * 2 + 0, 1 * 2 + 1));
  CHECK(t.loop_free());

  CHECK(iso(tensor(complete(2), complete(2)), two_edges()));

  SUBCASE("triangle with one looped vertex and a pendant") {
    Graph expect(4);
    expect.add_edge(0, 0);
    expect.add_edge(0, 1);
    expect.add_edge(0, 2);
    expect.add_edge(1, 2);
    expect.add_edge(0, 3);
    CHECK(iso(tensor(independent_set_graph(), independent_set_graph()), expect));
  }

  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const Graph a = testing::random_graph(rng, testing::uniform(rng, 0, 6));
    CHECK(iso(tensor(looped_points(1), a), a));
  }
  CHECK(tensor_power(cycle(3), 0) == looped_points(1));
  CHECK(tensor_power(cycle(3), 2) == tensor(cycle(3), cycle(3)));
}

TEST_CASE("exponential graph") {
  SUBCASE("edge test over both orientations") {
    // f1 ~ f2 in A^{K_2} needs f1(0)f2(1) and f1(1)f2(0) in E(A).
    const Graph p = power(path(2), complete(2));
    const PowerVertexCodec codec(2, 2);
    const std::vector<Vertex> f01{0, 1}, f10{1, 0}, f00{0, 0}, f11{1, 1};
    CHECK(p.adjacent(codec.encode(f00), codec.encode(f11)));
    CHECK(p.has_loop(codec.encode(f01)));
    CHECK(p.has_loop(codec.encode(f10)));
    CHECK_FALSE(p.has_loop(codec.encode(f00)));
    CHECK_FALSE(p.adjacent(codec.encode(f01), codec.encode(f10)));
  }
  const Graph hk2 = power(independent_set_graph(), complete(2));
  CHECK(hk2.order() == 4);
  CHECK(hk2.loop_count() == 3);
  CHECK(iso(looped_subgraph(hk2), widom_rowlinson()));

  // With no edges in the exponent every pair of functions is adjacent.
  CHECK(power(empty_graph(2), empty_graph(2)) == loop_all(complete(4)));
  CHECK(power(empty_graph(0), empty_graph(0)) == looped_points(1));
  CHECK(power(cycle(3), empty_graph(0)) == looped_points(1));

  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const Graph a = testing::random_graph(rng, testing::uniform(rng, 0, 6));
    CHECK(iso(power(a, looped_points(1)), a));
  }

  CHECK_THROWS_AS(power(complete(4), empty_graph(9)), ResourceError);
  CHECK_THROWS_AS(power(complete(2), empty_graph(4), 15), ResourceError);
  CHECK(power(complete(2), empty_graph(4), 16).order() == 16);
}

TEST_CASE("union and join") {
  Rng rng(13);
  const Graph a = testing::random_graph(rng, 5);
  CHECK(disjoint_union(empty_graph(0), a) == a);
  CHECK(iso(disjoint_union(complete(2), complete(2)), tensor(complete(2), complete(2))));
  for (std::size_t k = 1; k <= 4; ++k) CHECK(iso(copies(a, k), tensor(a, looped_points(k))));

  CHECK(iso(join(cycle(3), cycle(3)), complete(6)));
  CHECK(iso(join(empty_graph(1), empty_graph(1)), complete(2)));
  const Graph g = join(cycle(5), cycle(5));
  CHECK(g.order() == 10);
  CHECK(regularity(g) == 7u);
}

TEST_CASE("loop operators") {
  CHECK(loop_all(empty_graph(4)) == looped_points(4));
  for (std::size_t d = 1; d <= 5; ++d)
    CHECK(iso(tensor(loop_all(complete(d)), complete(2)), complete_bipartite(d, d)));
  Rng rng(14);
  const Graph a = testing::random_graph(rng, 6);
  CHECK(loop_all(loop_all(a)) == loop_all(a));

  CHECK(looped_subgraph(looped_points(3)) == looped_points(3));
  CHECK(looped_subgraph(complete(5)).order() == 0);
  Graph g(4);
  g.add_edge(1, 1);
  g.add_edge(3, 3);
  g.add_edge(1, 3);
  g.add_edge(0, 1);
  CHECK(looped_subgraph(g) == loop_all(complete(2)));
}

TEST_CASE("double cover") {
  CHECK(iso(double_cover(complete(2)), two_edges()));
  CHECK(iso(double_cover(cycle(3)), cycle(6)));
  Rng rng(15);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testing::random_graph(rng, testing::uniform(rng, 0, 6));
    const Graph dc = double_cover(g);
    CHECK(is_bipartite(dc));
    CHECK(iso(dc, tensor(g, complete(2))));
    const Graph b = testing::random_graph(rng, testing::uniform(rng, 0, 6), 0.5, 0.0);
    if (is_bipartite(b)) CHECK(iso(double_cover(b), tensor(b, looped_points(2))));
  }
}

TEST_CASE("identity suite on random instances") {
  Rng rng(16);
  for (const auto& id : testing::identity_suite(testing::random_connected_nonbipartite)) {
    CAPTURE(id.name);
    for (int t = 0; t < 15; ++t) {
      const auto c = id.sample(rng);
      CHECK(iso(c.lhs, c.rhs));
    }
  }
}

TEST_CASE("Freshman's Dream padding") {
  CHECK(testing::freshman_padding(1, 1, 2) == 2);
  const auto c =
      testing::freshman_case(looped_points(1), looped_points(1), complete(2));
  CHECK(c.lhs.order() == c.rhs.order());
  CHECK(c.rhs == disjoint_union(looped_points(2), empty_graph(2)));
}

TEST_CASE("Freshman's Dream fails for a bipartite exponent") {
  // l_2^{K_2}: the constant maps are looped, the two swaps form an edge.
  const auto c = testing::freshman_case(looped_points(1), looped_points(1), complete(2));
  CHECK(iso(c.lhs, disjoint_union(looped_points(2), complete(2))));
  CHECK_FALSE(iso(c.lhs, c.rhs));
  CHECK_FALSE(oracle::isomorphic(c.lhs, c.rhs));
  // The homomorphism identity behind it breaks at G = K_2: K_2 x K_2 is disconnected.
  CHECK(hom_count(complete(2), c.lhs) == 4);
  CHECK(hom_count(complete(2), c.rhs) == 2);
}

TEST_CASE("bipartiteness of products and powers") {
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    const Graph a = testing::random_graph(rng, testing::uniform(rng, 1, 4), 0.5, 0.2);
    const Graph b = testing::random_graph(rng, testing::uniform(rng, 1, 4), 0.5, 0.2);
    const bool ba = is_bipartite(a).has_value(), bb = is_bipartite(b).has_value();
    CHECK(is_bipartite(tensor(a, b)).has_value() == (ba || bb));
    // "Non-empty" means A has an edge; an edgeless A gives an edgeless power.
    if (a.edge_count() && checked_power(a.order(), b.order()) <= 4096)
      CHECK(is_bipartite(power(a, b)).has_value() == (ba && !bb));
  }
}

TEST_CASE("looped regular graph tensor K_2 is one degree higher") {
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{4, 3}, {6, 3}, {5, 2}, {6, 2}, {7, 4}})
    for (const Graph& g : enumerate_regular(n, d))
      CHECK(regularity(tensor(loop_all(g), complete(2))) == d + 1);
}
