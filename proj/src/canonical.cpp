#include "hgspec/canonical.hpp"

#include "hgspec/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace hgspec {

namespace {

using Colouring = std::vector<int>;

/// Replaces arbitrary sortable keys by their dense ranks.
template <typename Key>
Colouring dense_ranks(const std::vector<Key> &keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colouring out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
        sorted.begin());
  return out;
}

int count_colours(const Colouring &c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

/// 1-dimensional Weisfeiler-Leman on the incidence structure. Colour ids
/// stay ordered consistently with the input so the refinement is
/// invariant under relabelling.
Colouring refine(const Hypergraph &g, Colouring colour) {
  using Signature = std::pair<int, std::vector<std::vector<int>>>;
  int classes = count_colours(colour);
  for (;;) {
    std::vector<std::vector<int>> edge_sig(g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      for (Vertex v : g.edge(i))
        edge_sig[i].push_back(colour[v]);
      std::sort(edge_sig[i].begin(), edge_sig[i].end());
    }
    std::vector<Signature> sig(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      sig[v].first = colour[v];
      for (std::size_t ei : g.incident(v))
        sig[v].second.push_back(edge_sig[ei]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    Colouring next = dense_ranks(sig);
    int next_classes = count_colours(next);
    colour = std::move(next);
    if (next_classes == classes)
      return colour;
    classes = next_classes;
  }
}

struct Search {
  const Hypergraph &g;
  std::span<const int> base;
  std::vector<int> twin;
  std::optional<CanonicalForm> best;

  CanonicalForm leaf(const Colouring &colour) const {
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return std::pair(colour[a], a) < std::pair(colour[b], b);
    });
    std::vector<Vertex> position(n);
    for (std::size_t i = 0; i < n; ++i)
      position[order[i]] = i;

    CanonicalForm cf;
    cf.n = n;
    cf.k = g.uniformity();
    cf.colours.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      cf.colours[i] = base.empty() ? 0 : base[order[i]];
    for (const Edge &e : g.edges()) {
      Edge mapped;
      for (Vertex v : e)
        mapped.push_back(position[v]);
      std::sort(mapped.begin(), mapped.end());
      cf.edges.push_back(std::move(mapped));
    }
    std::sort(cf.edges.begin(), cf.edges.end());
    return cf;
  }

  void run(const Colouring &colour) {
    // Target: first cell that still mixes twin classes. Cells made of a
    // single twin class can be ordered arbitrarily.
    const int classes = count_colours(colour);
    std::vector<std::vector<Vertex>> cells(classes);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      cells[colour[v]].push_back(v);

    const std::vector<Vertex> *target = nullptr;
    for (const auto &cell : cells) {
      bool mixed = std::any_of(cell.begin(), cell.end(), [&](Vertex v) {
        return twin[v] != twin[cell.front()];
      });
      if (mixed) {
        target = &cell;
        break;
      }
    }

    if (target == nullptr) {
      CanonicalForm cf = leaf(colour);
      if (!best || cf < *best)
        best = std::move(cf);
      return;
    }

    std::vector<int> tried;
    for (Vertex v : *target) {
      if (std::find(tried.begin(), tried.end(), twin[v]) != tried.end())
        continue;
      tried.push_back(twin[v]);
      Colouring split(colour.size());
      for (Vertex w = 0; w < colour.size(); ++w)
        split[w] = 2 * colour[w] + 1;
      split[v] = 2 * colour[v];
      run(refine(g, dense_ranks(split)));
    }
  }
};

} // namespace

Hypergraph CanonicalForm::to_hypergraph() const {
  return Hypergraph(n, k, edges);
}

CanonicalForm canonical_form(const Hypergraph &g, std::span<const int> colours) {
  const std::size_t n = g.num_vertices();
  if (!colours.empty() && colours.size() != n)
    throw DomainError("colour vector length does not match vertex count");

  Colouring initial(n, 0);
  if (!colours.empty())
    initial = dense_ranks(std::vector<int>(colours.begin(), colours.end()));

  // Twins share colour and edge star; swapping two twins is an automorphism.
  std::vector<std::pair<int, std::vector<std::size_t>>> twin_key(n);
  for (Vertex v = 0; v < n; ++v) {
    auto inc = g.incident(v);
    twin_key[v] = {initial[v], {inc.begin(), inc.end()}};
  }

  Search search{g, colours, dense_ranks(twin_key), std::nullopt};
  search.run(refine(g, initial));
  return *search.best;
}

bool are_isomorphic(const Hypergraph &a, const Hypergraph &b) {
  if (a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges() || a.uniformity() != b.uniformity())
    return false;
  return canonical_form(a) == canonical_form(b);
}

} // namespace hgspec
