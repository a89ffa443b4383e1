#pragma once

#include "hgspec/hypergraph.hpp"

#include <utility>
#include <vector>

namespace hgspec {

/// A hypergraph with a distinguished attachment vertex.
struct RootedHypergraph {
  Hypergraph graph;
  Vertex root = 0;

  RootedHypergraph(Hypergraph g, Vertex r);
};

/// Simple graph given as an edge list on vertices 0..max label.
using SimpleEdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// S_m^k: m edges through vertex 0, each with k-1 private pendent vertices.
RootedHypergraph hyperstar(std::size_t m, int k);

/// k-th power: every 2-edge {a, b} gains k-2 private vertices. Vertex
/// count of the simple graph is 1 + the largest label; fresh vertices are
/// appended per edge in edge order.
Hypergraph kth_power_of_graph(const SimpleEdgeList &graph, int k);

/// G^{k,k/2}: simple vertex v becomes the block {v*k/2, ..., v*k/2 + k/2-1}
/// and each simple edge the union of its endpoint blocks.
Hypergraph blowup_power(const SimpleEdgeList &graph, int k);

/// Every k-subset of n vertices, in lexicographic order.
Hypergraph complete_hypergraph(std::size_t n, int k);

/// Simple cycle 0-1-...-(len-1)-0.
SimpleEdgeList cycle_graph(std::size_t len);

/// Vertex maps produced by a coalescence.
///
/// The first operand keeps its labels; vertices of the second operand,
/// except its root, are appended in their original order. Both roots map to
/// the first operand's root.
struct Coalescence {
  RootedHypergraph result;
  std::vector<Vertex> first_map;
  std::vector<Vertex> second_map;
  /// Indices (in result) of the edges coming from the second operand.
  std::vector<std::size_t> second_edges;
};

Coalescence coalesce_with_maps(const RootedHypergraph &g1,
                               const RootedHypergraph &g2);

/// G1(u) <> G2(u), rooted at the merged vertex.
RootedHypergraph coalesce(const RootedHypergraph &g1,
                          const RootedHypergraph &g2);

/// G = G0(v2) <> H(u) and G~ = G0(v1) <> H(u) on one shared labelling.
///
/// G0 keeps labels 0..n0-1 in both graphs; the non-root vertices of H get
/// the same labels n0.. in both. Only the image of the root differs.
struct Relocation {
  Hypergraph before; // H attached at v2
  Hypergraph after;  // H attached at v1
  Vertex v1 = 0;
  Vertex v2 = 0;
  std::size_t host_vertices = 0;
  /// Labels of V(H) \ {u}, in H's vertex order.
  std::vector<Vertex> branch_vertices;
  /// Edge indices of E(H) in both graphs (identical positions).
  std::vector<std::size_t> branch_edges;
};

Relocation relocate(const Hypergraph &g0, Vertex v1, Vertex v2,
                    const RootedHypergraph &h);

/// One hypertree to coalesce onto a vertex of the host.
struct Attachment {
  Vertex at;
  RootedHypergraph tree;
};

/// Coalesces each tree's root onto its host vertex, left to right. Host
/// vertices keep their labels.
Hypergraph attach_hypertrees(const Hypergraph &g0,
                             const std::vector<Attachment> &assignments);

} // namespace hgspec
