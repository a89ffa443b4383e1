#pragma once

#include "hgspec/hypergraph.hpp"

#include <compare>
#include <span>
#include <vector>

namespace hgspec {

/// Isomorphism-invariant certificate of a (optionally vertex-coloured)
/// hypergraph. Two hypergraphs are isomorphic, respecting colours, iff
/// their certificates compare equal.
struct CanonicalForm {
  std::size_t n = 0;
  int k = 0;
  /// Colour of canonical vertex i.
  std::vector<int> colours;
  /// Relabelled edges, each sorted, the list sorted lexicographically.
  std::vector<Edge> edges;

  friend auto operator<=>(const CanonicalForm &,
                          const CanonicalForm &) = default;
  friend bool operator==(const CanonicalForm &,
                         const CanonicalForm &) = default;

  Hypergraph to_hypergraph() const;
};

/// Canonical labelling by colour refinement and individualisation.
///
/// The search branches only over twin classes (vertices with identical
/// edge stars are interchangeable), so hyperstars and other graphs with
/// many pendent vertices stay cheap. Among all leaves the lexicographically
/// smallest relabelled edge list is kept.
CanonicalForm canonical_form(const Hypergraph &g,
                             std::span<const int> colours = {});

bool are_isomorphic(const Hypergraph &a, const Hypergraph &b);

} // namespace hgspec
