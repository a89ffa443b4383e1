#pragma once

#include "hgspec/canonical.hpp"
#include "hgspec/constructions.hpp"
#include "hgspec/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hgspec {

/// Outcome of checking one instance of a lemma. A solver that fails to
/// converge yields `inconclusive`, never `pass`.
enum class Verdict { pass, violation, inconclusive };

std::string to_string(Verdict v);

/// Worst of two verdicts: violation > inconclusive > pass.
Verdict combine(Verdict a, Verdict b);

/// Tolerances shared by the verifiers.
struct Tolerances {
  double eigenvalue = 1e-6;   // lambda comparisons
  double strict_margin = 1e-9;
  double host_entry = 1e-6;   // |y_u| above this triggers the strict check
  double sign_product = 1e-9; // x^e <= this on odd-bipartite branches
  double zero_entry = 1e-9;   // |x_{v2}| at or below this is the zero case
};

// ---------------------------------------------------------------------------
// Minimiser search

struct SearchEntry {
  Hypergraph graph;
  CanonicalForm form;
  double lambda = 0.0;
  double residual = 0.0;
  bool converged = false;
  /// brute_force_min value when the oracle ran (n <= oracle_max_vertices).
  std::optional<double> oracle_lambda;
  bool oracle_agrees = true;
};

struct SearchReport {
  std::string family;
  std::vector<SearchEntry> entries;
  /// Indices into entries attaining the minimum within `tolerance`.
  std::vector<std::size_t> minimizers;
  double tolerance = 1e-6;
  SolverConfig config;
  /// Gap between the minimum and the best non-minimiser (infinite when
  /// every entry is a minimiser).
  double runner_up_gap = 0.0;
  std::size_t nonconverged = 0;
  std::size_t oracle_disagreements = 0;
};

struct SearchOptions {
  double tolerance = 1e-6;
  bool use_oracle = true;
  std::size_t oracle_max_vertices = 10;
  std::size_t oracle_samples = 64;
  std::size_t oracle_refine_iters = 20000;
};

/// Least eigenvalue of every member; minimisers within tolerance. Ties are
/// reported as multiple minimisers, never broken.
SearchReport find_minimizer(const std::vector<Hypergraph> &family,
                            const SolverConfig &cfg,
                            const std::string &family_name = "",
                            const SearchOptions &opts = {});

/// Checks that the minimiser is unique and isomorphic to one of
/// `expected` (e.g. the hyperstar, or G0(u) <> S_m^k(u) over all u).
struct MinimizerCheck {
  Verdict verdict = Verdict::inconclusive;
  bool unique = false;
  bool matches_expected = false;
  std::string detail;
};

MinimizerCheck check_minimizer(const SearchReport &report,
                               const std::vector<Hypergraph> &expected);

/// G0(u) <> S_m^k(u) for every vertex u of g0.
std::vector<Hypergraph> hyperstar_attachments(const Hypergraph &g0,
                                              std::size_t m);

// ---------------------------------------------------------------------------
// Relocation (branch moved from v2 to v1)

struct RelocationRecord {
  Verdict verdict = Verdict::inconclusive;
  bool precondition_met = false;
  double lambda_before = 0.0; // lambda_min(G),  H at v2
  double lambda_after = 0.0;  // lambda_min(G~), H at v1
  double x_v1 = 0.0;
  double x_v2 = 0.0;
  TransportCase which = TransportCase::zero;
  double delta = 1.0;
  double alpha_branch = 0.0;
  double gamma_host = 0.0;
  /// A(G~) x~^k / ||x~||_k^k for the transported vector.
  double transported_quotient = 0.0;
  bool converged = false;
  std::string detail;
};

RelocationRecord verify_relocation(const Hypergraph &g0, Vertex v1, Vertex v2,
                                   const RootedHypergraph &h,
                                   const SolverConfig &cfg,
                                   const Tolerances &tol = {});

// ---------------------------------------------------------------------------
// Coalescence monotonicity

struct CoalescenceRecord {
  Verdict verdict = Verdict::inconclusive;
  double lambda_host = 0.0;   // lambda_min(G0)
  double lambda_joined = 0.0; // lambda_min(G0(u) <> H(u))
  double host_root_entry = 0.0;
  bool strict_checked = false;
  double alpha_branch = 0.0;
  bool branch_odd_bipartite = false;
  /// max over e in E(H) of x^e (meaningful when the branch is odd-bipartite).
  double max_branch_product = 0.0;
  bool converged = false;
  std::string detail;
};

CoalescenceRecord verify_coalescence_monotonicity(const RootedHypergraph &g0,
                                                  const RootedHypergraph &h,
                                                  const SolverConfig &cfg,
                                                  const Tolerances &tol = {});

// ---------------------------------------------------------------------------
// Seeded campaigns

struct RelocationInstance {
  Hypergraph host;
  Vertex v1 = 0;
  Vertex v2 = 0;
  RootedHypergraph branch;
};

struct CoalescenceInstance {
  RootedHypergraph host;
  RootedHypergraph branch;
};

/// Random (G0, H, v1, v2) with k = 4 and at most 12 vertices in G. v1 is
/// drawn among host vertices where the first eigenvector of G satisfies
/// |x_{v1}| >= |x_{v2}|; draws without such a vertex are discarded.
std::vector<RelocationInstance>
relocation_instances(std::uint64_t seed, std::size_t trials,
                     const SolverConfig &cfg);

/// Random connected host and branch, k = 4, at most 12 vertices joined.
std::vector<CoalescenceInstance> coalescence_instances(std::uint64_t seed,
                                                       std::size_t trials);

struct OddBipartiteRecord {
  Verdict verdict = Verdict::inconclusive;
  double lambda_min = 0.0;
  double rho = 0.0;
  bool odd_bipartite = false;
  std::string detail;
};

/// For odd-bipartite g: lambda_min == -rho within tolerance.
OddBipartiteRecord verify_odd_bipartite_identity(const Hypergraph &g,
                                                 const SolverConfig &cfg,
                                                 double tolerance = 1e-6);

} // namespace hgspec
