#include <doctest.h>

#include "homalg/algebra.hpp"
#include "homalg/error.hpp"
#include "homalg/family.hpp"
#include "homalg/homcount.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace homalg;
using testing::Rng;

TEST_CASE("small exact counts") {
  CHECK(hom_bruteforce(complete(2), complete(3)) == 6);
  CHECK(hom_count(complete(2), complete(3)) == 6);
  CHECK(hom_count(empty_graph(0), complete(3)) == 1);
  CHECK(hom_count(empty_graph(0), empty_graph(0)) == 1);
  CHECK(hom_count(empty_graph(1), empty_graph(0)) == 0);
  CHECK(hom_count(cycle(4), independent_set_graph()) == 7);
  CHECK(hom_bruteforce(cycle(4), independent_set_graph()) == 7);
  CHECK(hom_count(complete(2), widom_rowlinson()) == 7);
  CHECK(hom_count(empty_graph(1), cycle(7)) == 7);
  CHECK(hom_count(looped_points(1), complete(5)) == 0);
  CHECK(hom_count(looped_points(2), independent_set_graph()) == 1);
}

TEST_CASE("cycle colourings match the chromatic polynomial") {
  for (std::size_t n = 3; n <= 9; ++n)
    for (long q = 2; q <= 5; ++q)
      CHECK(hom_count(cycle(n), complete(q)) == oracle::cycle_colorings(n, q));
  CHECK(hom_count(cycle(5), complete(3)) == 30);
}

TEST_CASE("independent sets") {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const Graph g = testing::random_graph(rng, testing::uniform(rng, 1, 10), 0.4, 0.0);
    CHECK(hom_count(g, independent_set_graph()) == oracle::independent_sets(g));
  }
}

TEST_CASE("backtracking agrees with the naive oracle") {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::random_graph(rng, testing::uniform(rng, 0, 5));
    const Graph h = testing::random_graph(rng, testing::uniform(rng, 0, 5));
    const auto expect = oracle::hom(g, h);
    CHECK(hom_bruteforce(g, h) == expect);
    CHECK(hom_count(g, h) == expect);
  }
}

TEST_CASE("parallel mode gives the serial result") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testing::random_graph(rng, testing::uniform(rng, 1, 7), 0.5, 0.2);
    const Graph h = testing::random_graph(rng, testing::uniform(rng, 1, 8));
    CHECK(hom_count(g, h, {4}) == hom_count(g, h));
  }
}

TEST_CASE("counts are invariant under relabeling") {
  Rng rng(24);
  for (int t = 0; t < 40; ++t) {
    const Graph g = testing::random_graph(rng, testing::uniform(rng, 1, 6));
    const Graph h = testing::random_graph(rng, testing::uniform(rng, 1, 6));
    const auto base = hom_count(g, h);
    CHECK(hom_count(permute(g, testing::random_permutation(rng, g.order())), h) == base);
    CHECK(hom_count(g, permute(h, testing::random_permutation(rng, h.order()))) == base);
  }
}

TEST_CASE("components of the source multiply") {
  Rng rng(25);
  for (int t = 0; t < 40; ++t) {
    const Graph g1 = testing::random_graph(rng, testing::uniform(rng, 0, 5));
    const Graph g2 = testing::random_graph(rng, testing::uniform(rng, 0, 5));
    const Graph h = testing::random_graph(rng, testing::uniform(rng, 1, 5));
    CHECK(hom_count(disjoint_union(g1, g2), h) == hom_count(g1, h) * hom_count(g2, h));
  }
}

TEST_CASE("components of the target add for connected sources") {
  Rng rng(26);
  for (int t = 0; t < 40; ++t) {
    const Graph g = testing::random_connected_graph(rng, testing::uniform(rng, 1, 5));
    const Graph h1 = testing::random_graph(rng, testing::uniform(rng, 0, 5));
    const Graph h2 = testing::random_graph(rng, testing::uniform(rng, 0, 5));
    CHECK(hom_count(g, disjoint_union(h1, h2)) == hom_count(g, h1) + hom_count(g, h2));
  }
  // Many identical target components.
  CHECK(hom_count(cycle(5), copies(complete(3), 1000)) == 30 * 1000);
  CHECK(hom_count(copies(cycle(5), 2), copies(complete(3), 1000)) == 30 * 30 * 1000000);
}

TEST_CASE("complete bipartite sources") {
  CHECK(hom_from_complete_bipartite(3, 3, independent_set_graph()) == 15);
  CHECK(hom_from_complete_bipartite(2, 2, complete(3)) == 18);
  CHECK(hom_from_complete_bipartite(7, 7, complete(7)) == 1932553182);
  CHECK(hom_from_complete_bipartite(3, 3, widom_rowlinson()) == 151);
  Rng rng(27);
  for (int t = 0; t < 60; ++t) {
    const Graph h = testing::random_graph(rng, testing::uniform(rng, 0, 6));
    const std::size_t a = testing::uniform(rng, 1, 4), b = testing::uniform(rng, 1, 4);
    CHECK(hom_from_complete_bipartite(a, b, h) == oracle::hom(complete_bipartite(a, b), h));
    CHECK(hom_from_complete_bipartite(1, 1, h) == hom_count(complete(2), h));
  }
  CHECK_THROWS_AS(hom_from_complete_bipartite(0, 2, complete(2)), ParameterError);
}

TEST_CASE("complete sources") {
  CHECK(hom_from_complete(3, complete(3)) == 6);
  CHECK(hom_from_complete(4, widom_rowlinson()) == 31);
  CHECK(hom_from_complete(8, complete(7)) == 0);
  CHECK(hom_from_complete(7, complete(7)) == 5040);
  Rng rng(28);
  for (int t = 0; t < 60; ++t) {
    const Graph h = testing::random_graph(rng, testing::uniform(rng, 0, 6));
    const std::size_t q = testing::uniform(rng, 1, 5);
    CHECK(hom_from_complete(q, h) == oracle::hom(complete(q), h));
  }
  CHECK_THROWS_AS(hom_from_complete(0, complete(2)), ParameterError);
}

TEST_CASE("loop counting") {
  CHECK(count_loops(looped_points(5)) == 5);
  CHECK(count_loops(complete(4)) == 0);
  CHECK(count_loops(power(independent_set_graph(), complete(2))) == 3);
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(hom_bruteforce(empty_graph(9), complete(10)), ResourceError);
  CHECK_THROWS_AS(hom_bruteforce(empty_graph(3), complete(10), 999), ResourceError);
  CHECK(hom_bruteforce(empty_graph(3), complete(10), 1000) == 1000);
}

TEST_CASE("big integers stay exact") {
  const HomCount c = hom_count(empty_graph(40), complete(10));
  CHECK(to_decimal(c) == "1" + std::string(40, '0'));
  CHECK(parse_decimal(to_decimal(c)) == c);
  CHECK_THROWS_AS(parse_decimal("12a"), FormatError);
  CHECK(surjections(4, 2) == 14);
  CHECK(surjections(3, 3) == 6);
  CHECK(surjections(2, 3) == 0);
}
