#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hgspec {

using Vertex = std::size_t;
using Edge = std::vector<Vertex>;

/// A k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored as strictly increasing k-tuples in insertion order.
/// Construction validates the edge list and rejects duplicates instead of
/// merging them. Instances are immutable; the vertex-to-edge incidence is
/// built once and shared by every query.
class Hypergraph {
public:
  Hypergraph(std::size_t n, int k, std::vector<Edge> edges = {});

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  int uniformity() const noexcept { return k_; }

  const std::vector<Edge> &edges() const noexcept { return edges_; }
  const Edge &edge(std::size_t i) const { return edges_.at(i); }

  /// Indices of the edges containing v, ascending.
  std::span<const std::size_t> incident(Vertex v) const;

  friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

private:
  std::size_t n_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Two-colouring of the vertex set; side[v] == 1 places v in V1.
struct Bipartition {
  std::vector<int> side;

  /// True iff every edge meets V1 in an odd number of vertices.
  bool is_odd_bipartition_of(const Hypergraph &g) const;
};

/// Result of restricting a hypergraph to a vertex subset.
struct InducedSubhypergraph {
  Hypergraph graph;
  /// original[i] is the vertex of the host that became vertex i.
  std::vector<Vertex> original;
};

std::size_t degree(const Hypergraph &g, Vertex v);

/// Edges containing v, in stored order.
std::vector<Edge> edge_star(const Hypergraph &g, Vertex v);

bool is_connected(const Hypergraph &g);

/// Keeps the edges entirely inside vs; vs is relabelled order-preservingly.
InducedSubhypergraph induced_subhypergraph(const Hypergraph &g,
                                           std::span<const Vertex> vs);

/// Connected and m(k-1) == n-1.
bool is_hypertree(const Hypergraph &g);

/// Solves sum_{v in e} s_v = 1 (mod 2) for every edge by Gaussian
/// elimination over GF(2). Any solution is an odd-bipartition witness.
std::optional<Bipartition> find_odd_bipartition(const Hypergraph &g);

std::size_t max_degree(const Hypergraph &g);

} // namespace hgspec
