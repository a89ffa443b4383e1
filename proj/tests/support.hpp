#pragma once

#include "hgspec/constructions.hpp"
#include "hgspec/enumeration.hpp"
#include "hgspec/hypergraph.hpp"
#include "hgspec/io.hpp"
#include "hgspec/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace hgspec::testing {

inline std::filesystem::path data_dir() { return HGSPEC_TEST_DATA_DIR; }

inline Hypergraph load_data(const std::string &name) {
  return read_hypergraph(data_dir() / name);
}

/// Odd-bipartiteness by trying every vertex subset.
inline bool brute_force_odd_bipartite(const Hypergraph &g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint64_t> masks;
  for (const Edge &e : g.edges()) {
    std::uint64_t m = 0;
    for (Vertex v : e)
      m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) {
          return std::popcount(m & s) % 2 == 1;
        }))
      return true;
  return false;
}

inline Hypergraph permuted(const Hypergraph &g,
                           const std::vector<Vertex> &perm) {
  std::vector<Edge> edges;
  for (const Edge &e : g.edges()) {
    Edge f;
    for (Vertex v : e)
      f.push_back(perm[v]);
    edges.push_back(std::move(f));
  }
  return Hypergraph(g.num_vertices(), g.uniformity(), std::move(edges));
}

inline std::vector<Edge> sorted_edges(const Hypergraph &g) {
  std::vector<Edge> e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

/// Isomorphism by trying all n! relabellings; only for small n.
inline bool brute_force_isomorphic(const Hypergraph &a, const Hypergraph &b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges() || a.uniformity() != b.uniformity())
    return false;
  const std::vector<Edge> target = sorted_edges(b);
  std::vector<Vertex> perm(a.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (sorted_edges(permuted(a, perm)) == target)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Random vertex set of size k from 0..n-1, sorted.
inline Edge random_edge(std::mt19937_64 &rng, std::size_t n, int k) {
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  Edge e(pool.begin(), pool.begin() + k);
  std::sort(e.begin(), e.end());
  return e;
}

/// Up to `m` distinct random edges (not necessarily connected).
inline Hypergraph random_hypergraph(std::mt19937_64 &rng, std::size_t n, int k,
                                    std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t tries = 0; edges.size() < m && tries < 20 * m; ++tries) {
    Edge e = random_edge(rng, n, k);
    if (std::find(edges.begin(), edges.end(), e) == edges.end())
      edges.push_back(std::move(e));
  }
  return Hypergraph(n, k, std::move(edges));
}

inline VertexVector random_vector(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (double &v : x)
    v = u(rng);
  return VertexVector(std::move(x));
}

/// Named hypergraphs used by several suites.
inline std::vector<std::pair<std::string, Hypergraph>> corpus() {
  std::vector<std::pair<std::string, Hypergraph>> c;
  for (const char *name :
       {"single_edge_k2.json", "single_edge_k4.json", "single_edge_k6.json",
        "hyperstar_2_4.json", "hyperstar_3_3.json", "complete_5_4.json",
        "cycle_blowup_3_4.json", "cycle_blowup_5_4.json",
        "power_path_4.json", "two_components.json"})
    c.emplace_back(name, load_data(name));
  c.emplace_back("C4^{4,2}", blowup_power(cycle_graph(4), 4));
  c.emplace_back("C6^{4,2}", blowup_power(cycle_graph(6), 4));
  c.emplace_back("C3^{6,3}", blowup_power(cycle_graph(3), 6));
  c.emplace_back("K6^3", complete_hypergraph(6, 3));
  c.emplace_back("K6^4", complete_hypergraph(6, 4));
  c.emplace_back("K7^2", complete_hypergraph(7, 2));
  for (std::size_t m = 1; m <= 3; ++m)
    for (const Hypergraph &t : enumerate_hypertrees(m, 4))
      c.emplace_back("hypertree m=" + std::to_string(m), t);
  for (std::size_t m = 1; m <= 5; ++m)
    for (const Hypergraph &t : enumerate_hypertrees(m, 2))
      c.emplace_back("tree m=" + std::to_string(m), t);
  return c;
}

} // namespace hgspec::testing
