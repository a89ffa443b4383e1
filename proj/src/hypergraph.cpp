#include "hgspec/hypergraph.hpp"

#include "hgspec/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <string>

namespace hgspec {

namespace {

void check_vertex(const Hypergraph &g, Vertex v) {
  if (v >= g.num_vertices())
    throw DomainError("vertex " + std::to_string(v) + " out of range for n=" +
                      std::to_string(g.num_vertices()));
}

} // namespace

Hypergraph::Hypergraph(std::size_t n, int k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)), incidence_(n) {
  if (k_ < 2)
    throw DomainError("uniformity must be at least 2, got " +
                      std::to_string(k_));
  if (!edges_.empty() && n_ < static_cast<std::size_t>(k_))
    throw DomainError("n=" + std::to_string(n_) + " is smaller than k=" +
                      std::to_string(k_));

  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge &e = edges_[i];
    if (e.size() != static_cast<std::size_t>(k_))
      throw DomainError("edge " + std::to_string(i) + " has " +
                        std::to_string(e.size()) + " vertices, expected " +
                        std::to_string(k_));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw DomainError("edge " + std::to_string(i) +
                        " repeats a vertex");
    if (e.back() >= n_)
      throw DomainError("edge " + std::to_string(i) +
                        " references a vertex outside [0, n)");
    if (!seen.insert(e).second)
      throw DomainError("duplicate edge at position " + std::to_string(i));
    for (Vertex v : e)
      incidence_[v].push_back(i);
  }
}

std::span<const std::size_t> Hypergraph::incident(Vertex v) const {
  if (v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " out of range for n=" +
                      std::to_string(n_));
  return incidence_[v];
}

bool Bipartition::is_odd_bipartition_of(const Hypergraph &g) const {
  if (side.size() != g.num_vertices())
    return false;
  for (const Edge &e : g.edges()) {
    int count = 0;
    for (Vertex v : e)
      count += side[v] != 0;
    if (count % 2 == 0)
      return false;
  }
  return true;
}

std::size_t degree(const Hypergraph &g, Vertex v) {
  return g.incident(v).size();
}

std::vector<Edge> edge_star(const Hypergraph &g, Vertex v) {
  std::vector<Edge> star;
  for (std::size_t i : g.incident(v))
    star.push_back(g.edge(i));
  return star;
}

std::size_t max_degree(const Hypergraph &g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    d = std::max(d, g.incident(v).size());
  return d;
}

bool is_connected(const Hypergraph &g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1)
    return true;

  // BFS over the vertex-edge incidence graph.
  std::vector<bool> vertex_seen(n, false), edge_seen(g.num_edges(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  vertex_seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (std::size_t ei : g.incident(v)) {
      if (edge_seen[ei])
        continue;
      edge_seen[ei] = true;
      for (Vertex w : g.edge(ei)) {
        if (!vertex_seen[w]) {
          vertex_seen[w] = true;
          ++reached;
          frontier.push(w);
        }
      }
    }
  }
  return reached == n;
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph &g,
                                           std::span<const Vertex> vs) {
  std::vector<Vertex> kept(vs.begin(), vs.end());
  for (Vertex v : kept)
    check_vertex(g, v);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  constexpr Vertex absent = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(g.num_vertices(), absent);
  for (std::size_t i = 0; i < kept.size(); ++i)
    relabel[kept[i]] = i;

  std::vector<Edge> edges;
  for (const Edge &e : g.edges()) {
    if (std::all_of(e.begin(), e.end(),
                    [&](Vertex v) { return relabel[v] != absent; })) {
      Edge mapped;
      mapped.reserve(e.size());
      for (Vertex v : e)
        mapped.push_back(relabel[v]);
      edges.push_back(std::move(mapped));
    }
  }
  return {Hypergraph(kept.size(), g.uniformity(), std::move(edges)),
          std::move(kept)};
}

bool is_hypertree(const Hypergraph &g) {
  if (!is_connected(g))
    return false;
  const std::size_t n = g.num_vertices();
  const std::size_t k = static_cast<std::size_t>(g.uniformity());
  return g.num_edges() * (k - 1) + 1 == n;
}

std::optional<Bipartition> find_odd_bipartition(const Hypergraph &g) {
  const std::size_t n = g.num_vertices();
  const std::size_t words = (n + 1 + 63) / 64; // n variables + RHS bit
  const std::size_t rhs = n;

  auto get = [](const std::vector<std::uint64_t> &row, std::size_t bit) {
    return (row[bit / 64] >> (bit % 64)) & 1u;
  };

  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(g.num_edges());
  for (const Edge &e : g.edges()) {
    std::vector<std::uint64_t> row(words, 0);
    for (Vertex v : e)
      row[v / 64] ^= std::uint64_t{1} << (v % 64);
    row[rhs / 64] |= std::uint64_t{1} << (rhs % 64);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !get(rows[pivot], col))
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && get(rows[r], col))
        for (std::size_t w = 0; w < words; ++w)
          rows[r][w] ^= rows[rank][w];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  // A row reduced to 0 = 1 makes the system inconsistent.
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (get(rows[r], rhs))
      return std::nullopt;

  // Free variables set to 0; pivots read off the reduced RHS.
  Bipartition b{std::vector<int>(n, 0)};
  for (std::size_t r = 0; r < rank; ++r)
    b.side[pivot_col[r]] = static_cast<int>(get(rows[r], rhs));
  return b;
}

} // namespace hgspec
