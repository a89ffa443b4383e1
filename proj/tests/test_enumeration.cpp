#include "hgspec/canonical.hpp"
#include "hgspec/enumeration.hpp"
#include "hgspec/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hgspec;
using namespace hgspec::testing;

namespace {

/// Pairwise-isomorphism dedup with the permutation oracle; slow, small n.
std::size_t count_classes(const std::vector<Hypergraph> &gs) {
  std::vector<Hypergraph> reps;
  for (const Hypergraph &g : gs)
    if (std::none_of(reps.begin(), reps.end(), [&](const Hypergraph &r) {
          return brute_force_isomorphic(r, g);
        }))
      reps.push_back(g);
  return reps.size();
}

} // namespace

TEST(Hypertrees, CountsMatchKnownValues) {
  // 4-uniform hypertrees by edge count.
  const std::size_t k4[] = {1, 1, 2, 4};
  for (std::size_t m = 1; m <= 4; ++m)
    EXPECT_EQ(enumerate_hypertrees(m, 4).size(), k4[m - 1]) << "m=" << m;
  // Trees with m edges (m+1 vertices): 1, 1, 2, 3, 6.
  const std::size_t k2[] = {1, 1, 2, 3, 6};
  for (std::size_t m = 1; m <= 5; ++m)
    EXPECT_EQ(enumerate_hypertrees(m, 2).size(), k2[m - 1]) << "m=" << m;
}

TEST(Hypertrees, AllAreHypertreesAndPairwiseDistinct) {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto trees = enumerate_hypertrees(m, 4);
    std::set<CanonicalForm> forms;
    for (const Hypergraph &t : trees) {
      EXPECT_TRUE(is_hypertree(t));
      EXPECT_EQ(t.num_edges(), m);
      forms.insert(canonical_form(t));
    }
    EXPECT_EQ(forms.size(), trees.size());
  }
}

TEST(Hypertrees, SmallTreesAgreeWithPermutationOracle) {
  for (std::size_t m = 1; m <= 5; ++m) {
    auto trees = enumerate_hypertrees(m, 2);
    EXPECT_EQ(count_classes(trees), trees.size());
  }
}

TEST(Hypertrees, ContainsTheHyperstar) {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto trees = enumerate_hypertrees(m, 4);
    EXPECT_EQ(std::count_if(trees.begin(), trees.end(),
                            [&](const Hypergraph &t) {
                              return are_isomorphic(t, hyperstar(m, 4).graph);
                            }),
              1);
  }
}

TEST(Hypertrees, RejectsOutOfRangeParameters) {
  EXPECT_THROW(enumerate_hypertrees(0, 4), DomainError);
  EXPECT_THROW(enumerate_hypertrees(6, 4), DomainError);
  EXPECT_THROW(enumerate_hypertrees(2, 3), DomainError);
}

TEST(RootedHypertrees, RootOrbitCounts) {
  // A single edge has one root orbit; S_2^4 has the centre, a leaf.
  EXPECT_EQ(enumerate_rooted_hypertrees(1, 4).size(), 1u);
  EXPECT_EQ(enumerate_rooted_hypertrees(2, 4).size(), 2u);
  // Trees on 3 vertices (path P3): centre and leaf.
  EXPECT_EQ(enumerate_rooted_hypertrees(2, 2).size(), 2u);
  // Rooted trees with 4 vertices: 4.
  EXPECT_EQ(enumerate_rooted_hypertrees(3, 2).size(), 4u);
}

TEST(Family, KeepsHostLabels) {
  Hypergraph g0 = complete_hypergraph(5, 4);
  for (const Hypergraph &g : enumerate_family(g0, 2)) {
    EXPECT_EQ(g.num_edges(), 7u);
    for (std::size_t i = 0; i < g0.num_edges(); ++i)
      EXPECT_EQ(g.edge(i), g0.edge(i));
  }
  EXPECT_EQ(enumerate_family(g0, 0), std::vector<Hypergraph>{g0});
}

TEST(Family, CompleteHostCounts) {
  // K5^4 is vertex-transitive, so T_1 has one member and T_2 three:
  // S_2 on a vertex, two pendant edges on two vertices, a path of two.
  EXPECT_EQ(enumerate_family(complete_hypergraph(5, 4), 1).size(), 1u);
  EXPECT_EQ(enumerate_family(complete_hypergraph(5, 4), 2).size(), 3u);
}

TEST(Family, GeneratorsAgree) {
  std::vector<Hypergraph> hosts{hyperstar(1, 4).graph, complete_hypergraph(5, 4),
                                blowup_power(cycle_graph(3), 4),
                                hyperstar(2, 4).graph};
  for (const Hypergraph &g0 : hosts)
    for (std::size_t m = 1; m <= 3; ++m) {
      auto a = enumerate_family(g0, m);
      auto b = enumerate_family_incremental(g0, m);
      std::set<CanonicalForm> fa, fb;
      for (const Hypergraph &g : a)
        fa.insert(canonical_form(g));
      for (const Hypergraph &g : b)
        fb.insert(canonical_form(g));
      EXPECT_EQ(fa, fb) << "m=" << m;
      EXPECT_EQ(fa.size(), a.size());
    }
}

TEST(Family, SmallFamiliesAgreeWithPermutationOracle) {
  // Graph hosts keep n small enough for exhaustive relabelling.
  Hypergraph tri = blowup_power(cycle_graph(3), 2);
  for (std::size_t m = 1; m <= 3; ++m) {
    auto fam = enumerate_family(tri, m);
    EXPECT_EQ(count_classes(fam), fam.size());
    // Every incremental member is isomorphic to some listed member.
    for (const Hypergraph &g : enumerate_family_incremental(tri, m))
      EXPECT_TRUE(std::any_of(fam.begin(), fam.end(), [&](const Hypergraph &f) {
        return brute_force_isomorphic(f, g);
      }));
  }
}

TEST(Family, RejectsBadHosts) {
  EXPECT_THROW(enumerate_family(load_data("two_components.json"), 1), DomainError);
  EXPECT_THROW(enumerate_family(complete_hypergraph(5, 4), 5), DomainError);
}

TEST(Random, ConnectedHypergraphsAndHypertrees) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    Hypergraph g = random_connected_hypergraph(rng, 4 + i % 7, 4, i % 3);
    EXPECT_TRUE(is_connected(g));
    RootedHypergraph t = random_hypertree(rng, 1 + i % 4, 4);
    EXPECT_TRUE(is_hypertree(t.graph));
    EXPECT_LT(t.root, t.graph.num_vertices());
  }
  EXPECT_THROW(random_connected_hypergraph(rng, 3, 4, 0), DomainError);
}
