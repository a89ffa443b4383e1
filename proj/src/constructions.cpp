#include "hgspec/constructions.hpp"

#include "hgspec/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hgspec {

namespace {

std::size_t simple_vertex_count(const SimpleEdgeList &graph) {
  std::size_t n = 0;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [a, b] : graph) {
    if (a == b)
      throw DomainError("simple graph has a self-loop at vertex " +
                        std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second)
      throw DomainError("simple graph repeats the edge {" +
                        std::to_string(a) + ", " + std::to_string(b) + "}");
    n = std::max({n, a + 1, b + 1});
  }
  return n;
}

} // namespace

RootedHypergraph::RootedHypergraph(Hypergraph g, Vertex r)
    : graph(std::move(g)), root(r) {
  if (root >= graph.num_vertices())
    throw DomainError("root " + std::to_string(root) +
                      " is not a vertex of the graph");
}

RootedHypergraph hyperstar(std::size_t m, int k) {
  if (m == 0)
    throw DomainError("hyperstar needs at least one edge");
  if (k < 2)
    throw DomainError("uniformity must be at least 2");
  const std::size_t span = static_cast<std::size_t>(k - 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    Edge e{0};
    for (std::size_t j = 1; j <= span; ++j)
      e.push_back(i * span + j);
    edges.push_back(std::move(e));
  }
  return {Hypergraph(m * span + 1, k, std::move(edges)), 0};
}

Hypergraph kth_power_of_graph(const SimpleEdgeList &graph, int k) {
  if (k < 2)
    throw DomainError("uniformity must be at least 2");
  const std::size_t base = simple_vertex_count(graph);
  Vertex next = base;
  std::vector<Edge> edges;
  for (auto [a, b] : graph) {
    Edge e{a, b};
    for (int j = 0; j < k - 2; ++j)
      e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph(next, k, std::move(edges));
}

Hypergraph blowup_power(const SimpleEdgeList &graph, int k) {
  if (k < 2 || k % 2 != 0)
    throw DomainError("blow-up power needs even k >= 2, got " +
                      std::to_string(k));
  const std::size_t half = static_cast<std::size_t>(k / 2);
  const std::size_t base = simple_vertex_count(graph);
  std::vector<Edge> edges;
  for (auto [a, b] : graph) {
    Edge e;
    for (std::size_t j = 0; j < half; ++j) {
      e.push_back(a * half + j);
      e.push_back(b * half + j);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(base * half, k, std::move(edges));
}

Hypergraph complete_hypergraph(std::size_t n, int k) {
  if (k < 2)
    throw DomainError("uniformity must be at least 2");
  const std::size_t ku = static_cast<std::size_t>(k);
  if (n < ku)
    throw DomainError("complete hypergraph needs n >= k");
  std::vector<Edge> edges;
  Edge e(ku);
  for (std::size_t i = 0; i < ku; ++i)
    e[i] = i;
  for (;;) {
    edges.push_back(e);
    // Next combination in lexicographic order.
    std::size_t i = ku;
    while (i > 0 && e[i - 1] == n - ku + (i - 1))
      --i;
    if (i == 0)
      break;
    ++e[i - 1];
    for (std::size_t j = i; j < ku; ++j)
      e[j] = e[j - 1] + 1;
  }
  return Hypergraph(n, k, std::move(edges));
}

SimpleEdgeList cycle_graph(std::size_t len) {
  if (len < 3)
    throw DomainError("a cycle needs at least 3 vertices");
  SimpleEdgeList out;
  for (std::size_t i = 0; i < len; ++i)
    out.emplace_back(i, (i + 1) % len);
  return out;
}

Coalescence coalesce_with_maps(const RootedHypergraph &g1,
                               const RootedHypergraph &g2) {
  const Hypergraph &a = g1.graph;
  const Hypergraph &b = g2.graph;
  if (a.uniformity() != b.uniformity())
    throw DomainError("cannot coalesce hypergraphs of different uniformity");

  std::vector<Vertex> first_map(a.num_vertices());
  for (Vertex v = 0; v < a.num_vertices(); ++v)
    first_map[v] = v;

  std::vector<Vertex> second_map(b.num_vertices());
  Vertex next = a.num_vertices();
  for (Vertex v = 0; v < b.num_vertices(); ++v)
    second_map[v] = (v == g2.root) ? g1.root : next++;

  std::vector<Edge> edges = a.edges();
  std::vector<std::size_t> second_edges;
  for (const Edge &e : b.edges()) {
    Edge mapped;
    for (Vertex v : e)
      mapped.push_back(second_map[v]);
    second_edges.push_back(edges.size());
    edges.push_back(std::move(mapped));
  }
  return {RootedHypergraph(Hypergraph(next, a.uniformity(), std::move(edges)),
                           g1.root),
          std::move(first_map), std::move(second_map),
          std::move(second_edges)};
}

RootedHypergraph coalesce(const RootedHypergraph &g1,
                          const RootedHypergraph &g2) {
  return coalesce_with_maps(g1, g2).result;
}

Relocation relocate(const Hypergraph &g0, Vertex v1, Vertex v2,
                    const RootedHypergraph &h) {
  if (v1 >= g0.num_vertices() || v2 >= g0.num_vertices())
    throw DomainError("relocation endpoints must be vertices of the host");
  if (v1 == v2)
    throw DomainError("relocation needs two distinct host vertices");

  Coalescence before = coalesce_with_maps(RootedHypergraph(g0, v2), h);
  Coalescence after = coalesce_with_maps(RootedHypergraph(g0, v1), h);

  Relocation r{before.result.graph, after.result.graph, v1, v2,
               g0.num_vertices(), {}, before.second_edges};
  for (Vertex v = 0; v < h.graph.num_vertices(); ++v)
    if (v != h.root)
      r.branch_vertices.push_back(before.second_map[v]);
  return r;
}

Hypergraph attach_hypertrees(const Hypergraph &g0,
                             const std::vector<Attachment> &assignments) {
  if (g0.num_vertices() == 0)
    throw DomainError("host hypergraph has no vertices");
  RootedHypergraph acc(g0, 0);
  for (const Attachment &a : assignments) {
    if (a.at >= g0.num_vertices())
      throw DomainError("attachment vertex " + std::to_string(a.at) +
                        " is not a host vertex");
    if (!is_hypertree(a.tree.graph))
      throw DomainError("attached hypergraph is not a hypertree");
    acc = coalesce(RootedHypergraph(acc.graph, a.at), a.tree);
  }
  return acc.graph;
}

} // namespace hgspec
