#include "hgspec/canonical.hpp"
#include "hgspec/constructions.hpp"
#include "hgspec/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hgspec;
using namespace hgspec::testing;

TEST(Constructions, Hyperstar) {
  RootedHypergraph s = hyperstar(3, 4);
  EXPECT_EQ(s.graph.num_vertices(), 10u);
  EXPECT_EQ(s.graph.num_edges(), 3u);
  EXPECT_EQ(s.root, 0u);
  EXPECT_EQ(degree(s.graph, 0), 3u);
  EXPECT_TRUE(is_hypertree(s.graph));
  EXPECT_EQ(hyperstar(2, 4).graph, load_data("hyperstar_2_4.json"));
  EXPECT_THROW(hyperstar(0, 4), DomainError);
  EXPECT_THROW(hyperstar(2, 1), DomainError);
}

TEST(Constructions, RootMustBeAVertex) {
  EXPECT_THROW(RootedHypergraph(hyperstar(1, 4).graph, 4), DomainError);
}

TEST(Constructions, CompleteHypergraph) {
  Hypergraph k5 = complete_hypergraph(5, 4);
  EXPECT_EQ(k5.num_edges(), 5u);
  EXPECT_EQ(k5.edge(0), (Edge{0, 1, 2, 3}));
  EXPECT_EQ(k5, load_data("complete_5_4.json"));
  EXPECT_EQ(complete_hypergraph(7, 3).num_edges(), 35u);
  EXPECT_THROW(complete_hypergraph(3, 4), DomainError);
}

TEST(Constructions, PowerOfGraph) {
  Hypergraph p = kth_power_of_graph({{0, 1}, {1, 2}, {2, 3}}, 4);
  EXPECT_EQ(p, load_data("power_path_4.json"));
  EXPECT_TRUE(is_hypertree(p));
  EXPECT_EQ(kth_power_of_graph({{0, 1}}, 2), complete_hypergraph(2, 2));
  EXPECT_THROW(kth_power_of_graph({{0, 0}}, 4), DomainError);
}

TEST(Constructions, BlowupPower) {
  Hypergraph c3 = blowup_power(cycle_graph(3), 4);
  EXPECT_EQ(c3.num_vertices(), 6u);
  EXPECT_EQ(c3.num_edges(), 3u);
  EXPECT_EQ(c3, load_data("cycle_blowup_3_4.json"));
  EXPECT_EQ(blowup_power(cycle_graph(5), 4), load_data("cycle_blowup_5_4.json"));
  EXPECT_THROW(blowup_power(cycle_graph(3), 3), DomainError);
  EXPECT_THROW(cycle_graph(2), DomainError);
}

TEST(Constructions, CoalescenceKeepsFirstLabels) {
  RootedHypergraph g1(complete_hypergraph(5, 4), 2);
  RootedHypergraph g2 = hyperstar(2, 4);
  Coalescence c = coalesce_with_maps(g1, g2);
  EXPECT_EQ(c.result.graph.num_vertices(), 5u + 7u - 1u);
  EXPECT_EQ(c.result.graph.num_edges(), 7u);
  EXPECT_EQ(c.result.root, 2u);
  for (Vertex v = 0; v < 5; ++v)
    EXPECT_EQ(c.first_map[v], v);
  EXPECT_EQ(c.second_map[0], 2u);
  EXPECT_EQ(c.second_map[1], 5u);
  EXPECT_EQ(c.second_edges, (std::vector<std::size_t>{5, 6}));
  EXPECT_EQ(degree(c.result.graph, 2), 4u + 2u);
}

TEST(Constructions, CoalescenceIsSymmetricUpToIsomorphism) {
  RootedHypergraph a(blowup_power(cycle_graph(3), 4), 1);
  RootedHypergraph b = hyperstar(2, 4);
  EXPECT_TRUE(are_isomorphic(coalesce(a, b).graph, coalesce(b, a).graph));
}

TEST(Constructions, RelocationSharesLabels) {
  Hypergraph g0 = blowup_power(cycle_graph(3), 4);
  RootedHypergraph h = hyperstar(2, 4);
  Relocation r = relocate(g0, 0, 3, h);
  EXPECT_EQ(r.host_vertices, 6u);
  EXPECT_EQ(r.before.num_vertices(), r.after.num_vertices());
  EXPECT_EQ(r.branch_vertices.size(), 6u);
  EXPECT_EQ(degree(r.before, 3), 2u + 2u);
  EXPECT_EQ(degree(r.after, 0), 2u + 2u);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(r.before.edge(i), r.after.edge(i));
  for (std::size_t e : r.branch_edges) {
    Edge a = r.before.edge(e), b = r.after.edge(e);
    std::replace(a.begin(), a.end(), Vertex{3}, Vertex{0});
    std::sort(a.begin(), a.end());
    EXPECT_EQ(a, b);
  }
  EXPECT_THROW(relocate(g0, 1, 1, h), DomainError);
  EXPECT_THROW(relocate(g0, 1, 6, h), DomainError);
}

TEST(Constructions, AttachHypertrees) {
  Hypergraph g0 = complete_hypergraph(5, 4);
  Hypergraph g = attach_hypertrees(g0, {{1, hyperstar(2, 4)}, {3, hyperstar(1, 4)}});
  EXPECT_EQ(g.num_edges(), 8u);
  EXPECT_EQ(g.num_vertices(), 5u + 9u);
  for (std::size_t i = 0; i < g0.num_edges(); ++i)
    EXPECT_EQ(g.edge(i), g0.edge(i));
  EXPECT_EQ(attach_hypertrees(g0, {}), g0);
  EXPECT_THROW(attach_hypertrees(g0, {{5, hyperstar(1, 4)}}), DomainError);
  RootedHypergraph cyc(blowup_power(cycle_graph(3), 4), 0);
  EXPECT_THROW(attach_hypertrees(g0, {{0, cyc}}), DomainError);
  EXPECT_THROW(attach_hypertrees(Hypergraph(0, 4), {}), DomainError);
}
