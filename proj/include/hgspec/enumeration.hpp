#pragma once

#include "hgspec/constructions.hpp"
#include "hgspec/hypergraph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hgspec {

/// All k-uniform hypertrees with m edges up to isomorphism, in canonical
/// labelling and canonical order. Desk-scale bounds: 1 <= m <= 5, k in {2, 4}.
std::vector<Hypergraph> enumerate_hypertrees(std::size_t m, int k);

/// Hypertrees with m edges paired with every root choice, up to rooted
/// isomorphism.
std::vector<RootedHypergraph> enumerate_rooted_hypertrees(std::size_t m, int k);

/// Members of T_m(G0) up to isomorphism: G0 with hypertrees totalling m
/// edges coalesced onto its vertices. Every member keeps G0 on labels
/// 0..n0-1. Generated from multisets of (host vertex, rooted hypertree).
/// Requires g0 connected and m <= 4.
std::vector<Hypergraph> enumerate_family(const Hypergraph &g0, std::size_t m);

/// Same family, generated edge by edge: each step adds one edge sharing a
/// single existing vertex with the current graph. Used to cross-check
/// enumerate_family.
std::vector<Hypergraph> enumerate_family_incremental(const Hypergraph &g0,
                                                     std::size_t m);

/// Uniformly drawn edges on n vertices until the hypergraph is connected,
/// then `extra` further distinct edges where possible.
Hypergraph random_connected_hypergraph(std::mt19937_64 &rng, std::size_t n,
                                       int k, std::size_t extra);

/// Random hypertree with m edges grown by single-vertex attachment, rooted
/// at a uniformly chosen vertex.
RootedHypergraph random_hypertree(std::mt19937_64 &rng, std::size_t m, int k);

} // namespace hgspec
