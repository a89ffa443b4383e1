#include "hgspec/canonical.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hgspec;
using namespace hgspec::testing;

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 3;
    const std::size_t n = k + rng() % 6;
    Hypergraph g = random_hypergraph(rng, n, k, 1 + rng() % 8);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(g), canonical_form(permuted(g, perm)));
  }
}

TEST(Canonical, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(5);
  int isomorphic = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 2 + trial % 3;
    const std::size_t n = k + rng() % (8 - k);
    const std::size_t m = 1 + rng() % 5;
    Hypergraph a = random_hypergraph(rng, n, k, m);
    Hypergraph b = random_hypergraph(rng, n, k, m);
    const bool expected = brute_force_isomorphic(a, b);
    isomorphic += expected;
    EXPECT_EQ(are_isomorphic(a, b), expected) << "trial " << trial;
  }
  EXPECT_GT(isomorphic, 10);
}

TEST(Canonical, RegularHypergraphsNeedIndividualisation) {
  // Both 2-regular on 6 vertices: a hexagon and two triangles.
  Hypergraph hex = blowup_power(cycle_graph(6), 2);
  Hypergraph tri(6, 2, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(are_isomorphic(hex, tri));
  EXPECT_TRUE(are_isomorphic(hex, permuted(hex, {3, 5, 1, 0, 2, 4})));
}

TEST(Canonical, FormRebuildsAnIsomorphicHypergraph) {
  Hypergraph g = load_data("hyperstar_2_4.json");
  CanonicalForm cf = canonical_form(g);
  Hypergraph h = cf.to_hypergraph();
  EXPECT_TRUE(brute_force_isomorphic(g, h));
  EXPECT_EQ(canonical_form(h), cf);
}

TEST(Canonical, ColoursDistinguishRoots) {
  Hypergraph star = hyperstar(2, 4).graph;
  std::vector<int> centre(star.num_vertices(), 0), leaf = centre, other = centre;
  centre[0] = 1;
  leaf[1] = 1;
  other[6] = 1;
  EXPECT_NE(canonical_form(star, centre), canonical_form(star, leaf));
  EXPECT_EQ(canonical_form(star, leaf), canonical_form(star, other));
}

TEST(Canonical, DifferentParametersAreNotIsomorphic) {
  EXPECT_FALSE(are_isomorphic(hyperstar(2, 4).graph, hyperstar(2, 3).graph));
  EXPECT_FALSE(are_isomorphic(complete_hypergraph(5, 4), complete_hypergraph(6, 4)));
}
