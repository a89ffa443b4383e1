#include "hgspec/enumeration.hpp"

#include "hgspec/canonical.hpp"
#include "hgspec/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace hgspec {

namespace {

/// g plus one edge made of `at` and k-1 fresh vertices.
Hypergraph attach_edge(const Hypergraph &g, Vertex at) {
  const std::size_t k = static_cast<std::size_t>(g.uniformity());
  std::vector<Edge> edges = g.edges();
  Edge e{at};
  for (std::size_t j = 0; j + 1 < k; ++j)
    e.push_back(g.num_vertices() + j);
  edges.push_back(std::move(e));
  return Hypergraph(g.num_vertices() + k - 1, g.uniformity(),
                    std::move(edges));
}

Hypergraph single_edge(int k) { return hyperstar(1, k).graph; }

/// Keeps the first representative of each isomorphism class, then orders
/// the survivors by certificate.
class Deduplicator {
public:
  bool add(Hypergraph g) {
    CanonicalForm cf = canonical_form(g);
    auto [it, inserted] = seen_.try_emplace(std::move(cf), std::move(g));
    return inserted;
  }

  std::vector<Hypergraph> take() && {
    std::vector<Hypergraph> out;
    out.reserve(seen_.size());
    for (auto &[cf, g] : seen_)
      out.push_back(std::move(g));
    return out;
  }

private:
  std::map<CanonicalForm, Hypergraph> seen_;
};

std::vector<Hypergraph> hypertrees_unchecked(std::size_t m, int k) {
  std::vector<Hypergraph> layer{canonical_form(single_edge(k)).to_hypergraph()};
  for (std::size_t edges = 2; edges <= m; ++edges) {
    std::map<CanonicalForm, bool> seen;
    std::vector<Hypergraph> next;
    for (const Hypergraph &t : layer)
      for (Vertex v = 0; v < t.num_vertices(); ++v) {
        CanonicalForm cf = canonical_form(attach_edge(t, v));
        if (seen.emplace(cf, true).second)
          next.push_back(cf.to_hypergraph());
      }
    std::sort(next.begin(), next.end(),
              [](const Hypergraph &a, const Hypergraph &b) {
                return canonical_form(a) < canonical_form(b);
              });
    layer = std::move(next);
  }
  return layer;
}

void check_host(const Hypergraph &g0, std::size_t m) {
  if (!is_connected(g0))
    throw DomainError("T_m(G0) needs a connected host hypergraph");
  if (g0.num_vertices() == 0)
    throw DomainError("T_m(G0) needs a nonempty host hypergraph");
  if (m > 4)
    throw DomainError("T_m(G0) enumeration is limited to m <= 4, got " +
                      std::to_string(m));
}

} // namespace

std::vector<Hypergraph> enumerate_hypertrees(std::size_t m, int k) {
  if (m < 1 || m > 5)
    throw DomainError("hypertree enumeration needs 1 <= m <= 5, got " +
                      std::to_string(m));
  if (k != 2 && k != 4)
    throw DomainError("hypertree enumeration supports k in {2, 4}, got " +
                      std::to_string(k));
  return hypertrees_unchecked(m, k);
}

std::vector<RootedHypergraph> enumerate_rooted_hypertrees(std::size_t m,
                                                          int k) {
  if (m < 1 || m > 5)
    throw DomainError("rooted hypertree enumeration needs 1 <= m <= 5");
  std::vector<RootedHypergraph> out;
  for (const Hypergraph &t : hypertrees_unchecked(m, k)) {
    std::set<CanonicalForm> roots;
    for (Vertex r = 0; r < t.num_vertices(); ++r) {
      std::vector<int> colours(t.num_vertices(), 0);
      colours[r] = 1;
      if (roots.insert(canonical_form(t, colours)).second)
        out.emplace_back(t, r);
    }
  }
  return out;
}

std::vector<Hypergraph> enumerate_family(const Hypergraph &g0, std::size_t m) {
  check_host(g0, m);
  if (m == 0)
    return {g0};

  // pieces[s] lists the rooted hypertrees with s edges.
  std::vector<std::vector<RootedHypergraph>> pieces(m + 1);
  for (std::size_t s = 1; s <= m; ++s)
    pieces[s] = enumerate_rooted_hypertrees(s, g0.uniformity());

  // An attachment item is (size, tree index, host vertex); multisets are
  // produced as non-decreasing item sequences.
  using Item = std::tuple<std::size_t, std::size_t, Vertex>;
  Deduplicator dedup;
  std::vector<Attachment> plan;

  auto recurse = [&](auto &&self, std::size_t remaining, Item floor) -> void {
    if (remaining == 0) {
      dedup.add(attach_hypertrees(g0, plan));
      return;
    }
    for (std::size_t s = std::get<0>(floor); s <= remaining; ++s)
      for (std::size_t t = 0; t < pieces[s].size(); ++t)
        for (Vertex v = 0; v < g0.num_vertices(); ++v) {
          Item item{s, t, v};
          if (item < floor)
            continue;
          plan.push_back({v, pieces[s][t]});
          self(self, remaining - s, item);
          plan.pop_back();
        }
  };
  recurse(recurse, m, Item{1, 0, 0});
  return std::move(dedup).take();
}

std::vector<Hypergraph> enumerate_family_incremental(const Hypergraph &g0,
                                                     std::size_t m) {
  check_host(g0, m);
  std::vector<Hypergraph> layer{g0};
  for (std::size_t step = 0; step < m; ++step) {
    Deduplicator dedup;
    for (const Hypergraph &g : layer)
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        dedup.add(attach_edge(g, v));
    layer = std::move(dedup).take();
  }
  return layer;
}

Hypergraph random_connected_hypergraph(std::mt19937_64 &rng, std::size_t n,
                                       int k, std::size_t extra) {
  const std::size_t ku = static_cast<std::size_t>(k);
  if (k < 2 || n < ku)
    throw DomainError("random hypergraph needs k >= 2 and n >= k");

  std::vector<Vertex> pool(n);
  for (Vertex v = 0; v < n; ++v)
    pool[v] = v;
  auto draw = [&] {
    std::shuffle(pool.begin(), pool.end(), rng);
    Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(ku));
    std::sort(e.begin(), e.end());
    return e;
  };

  std::set<Edge> edges;
  auto build = [&] {
    return Hypergraph(n, k, std::vector<Edge>(edges.begin(), edges.end()));
  };
  while (!is_connected(build()))
    edges.insert(draw());

  // The number of k-subsets bounds how many distinct extras exist.
  std::size_t attempts = 0;
  const std::size_t target = edges.size() + extra;
  while (edges.size() < target && attempts++ < 100 * (extra + 1))
    edges.insert(draw());
  return build();
}

RootedHypergraph random_hypertree(std::mt19937_64 &rng, std::size_t m, int k) {
  if (m < 1)
    throw DomainError("random hypertree needs at least one edge");
  Hypergraph t = single_edge(k);
  for (std::size_t i = 1; i < m; ++i) {
    std::uniform_int_distribution<Vertex> pick(0, t.num_vertices() - 1);
    t = attach_edge(t, pick(rng));
  }
  std::uniform_int_distribution<Vertex> pick(0, t.num_vertices() - 1);
  Vertex root = pick(rng);
  return {std::move(t), root};
}

} // namespace hgspec
