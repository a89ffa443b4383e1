#include "hgspec/verification.hpp"

#include "hgspec/enumeration.hpp"
#include "hgspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace hgspec {

namespace {

double edge_product(const Edge &e, const VertexVector &x) {
  double p = 1.0;
  for (Vertex v : e)
    p *= x[v];
  return p;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

} // namespace

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::violation:
    return "violation";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "unknown";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::violation || b == Verdict::violation)
    return Verdict::violation;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive)
    return Verdict::inconclusive;
  return Verdict::pass;
}

SearchReport find_minimizer(const std::vector<Hypergraph> &family,
                            const SolverConfig &cfg,
                            const std::string &family_name,
                            const SearchOptions &opts) {
  if (family.empty())
    throw DomainError("minimiser search needs a nonempty family");

  SearchReport report;
  report.family = family_name;
  report.tolerance = opts.tolerance;
  report.config = cfg;

  for (const Hypergraph &g : family) {
    if (g.uniformity() % 2 != 0)
      throw UnsupportedUniformity(g.uniformity());
    EigenResult r = least_h_eigenvalue(g, cfg);
    SearchEntry entry{g, canonical_form(g), r.lambda, r.residual,
                      r.converged, std::nullopt, true};
    if (opts.use_oracle && g.num_vertices() <= opts.oracle_max_vertices) {
      EigenResult o = brute_force_min(g, opts.oracle_samples,
                                      opts.oracle_refine_iters, cfg.seed);
      entry.oracle_lambda = o.lambda;
      entry.oracle_agrees = std::abs(o.lambda - r.lambda) <= opts.tolerance;
      // The oracle found a lower stationary value: keep the better bound.
      if (o.lambda < entry.lambda) {
        entry.lambda = o.lambda;
        entry.residual = o.residual;
        entry.converged = o.converged;
      }
      if (!entry.oracle_agrees)
        ++report.oracle_disagreements;
    }
    if (!entry.converged)
      ++report.nonconverged;
    report.entries.push_back(std::move(entry));
  }

  double best = std::numeric_limits<double>::infinity();
  for (const SearchEntry &e : report.entries)
    best = std::min(best, e.lambda);
  report.runner_up_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const double gap = report.entries[i].lambda - best;
    if (gap <= opts.tolerance)
      report.minimizers.push_back(i);
    else
      report.runner_up_gap = std::min(report.runner_up_gap, gap);
  }
  return report;
}

std::vector<Hypergraph> hyperstar_attachments(const Hypergraph &g0,
                                              std::size_t m) {
  std::vector<Hypergraph> out;
  const RootedHypergraph star = hyperstar(m, g0.uniformity());
  for (Vertex u = 0; u < g0.num_vertices(); ++u)
    out.push_back(attach_hypertrees(g0, {{u, star}}));
  return out;
}

MinimizerCheck check_minimizer(const SearchReport &report,
                               const std::vector<Hypergraph> &expected) {
  MinimizerCheck check;
  std::set<CanonicalForm> targets;
  for (const Hypergraph &g : expected)
    targets.insert(canonical_form(g));

  check.unique = report.minimizers.size() == 1;
  check.matches_expected =
      !report.minimizers.empty() &&
      std::all_of(report.minimizers.begin(), report.minimizers.end(),
                  [&](std::size_t i) {
                    return targets.count(report.entries[i].form) > 0;
                  });

  std::ostringstream detail;
  detail << report.minimizers.size() << " minimiser(s) among "
         << report.entries.size() << " members";
  if (report.nonconverged > 0)
    detail << "; " << report.nonconverged << " member(s) did not converge";
  if (report.oracle_disagreements > 0)
    detail << "; oracle disagreed on " << report.oracle_disagreements
           << " member(s)";
  check.detail = detail.str();

  if (report.nonconverged > 0 || report.oracle_disagreements > 0)
    check.verdict = Verdict::inconclusive;
  else if (check.unique && check.matches_expected)
    check.verdict = Verdict::pass;
  else
    check.verdict = Verdict::violation;
  return check;
}

RelocationRecord verify_relocation(const Hypergraph &g0, Vertex v1, Vertex v2,
                                   const RootedHypergraph &h,
                                   const SolverConfig &cfg,
                                   const Tolerances &tol) {
  const Relocation reloc = relocate(g0, v1, v2, h);
  const int k = g0.uniformity();
  const EigenResult before = least_h_eigenvalue(reloc.before, cfg);
  const EigenResult after = least_h_eigenvalue(reloc.after, cfg);

  RelocationRecord rec;
  rec.lambda_before = before.lambda;
  rec.lambda_after = after.lambda;
  rec.converged = before.converged && after.converged;
  const VertexVector &x = before.vector;
  rec.x_v1 = x[v1];
  rec.x_v2 = x[v2];
  rec.precondition_met = std::abs(x[v1]) >= std::abs(x[v2]);

  if (!rec.precondition_met) {
    rec.verdict = rec.converged ? Verdict::pass : Verdict::inconclusive;
    rec.detail = "precondition |x_v1| >= |x_v2| not met; nothing to check";
    return rec;
  }

  rec.which = classify_transport(reloc, x, tol.zero_entry);
  const TransportedVector tv = transport_vector(reloc, x, rec.which);
  rec.delta = tv.delta;
  rec.alpha_branch = tv.alpha_branch;
  rec.gamma_host = tv.gamma_host;
  rec.transported_quotient =
      rayleigh(reloc.after, tv.vector) / tv.vector.norm_power(k);

  const bool eigen_ok = rec.lambda_after <= rec.lambda_before + tol.eigenvalue;
  const bool transport_ok =
      rec.transported_quotient <= rec.lambda_before + tol.eigenvalue;

  if (!rec.converged) {
    rec.verdict = Verdict::inconclusive;
    rec.detail = "eigen-solver did not converge";
  } else if (eigen_ok && transport_ok) {
    rec.verdict = Verdict::pass;
  } else {
    rec.verdict = Verdict::violation;
    rec.detail = std::string(eigen_ok ? "" : "lambda_min(G~) > lambda_min(G); ") +
                 (transport_ok ? "" : "transported quotient above lambda_min(G)");
  }
  return rec;
}

CoalescenceRecord verify_coalescence_monotonicity(const RootedHypergraph &g0,
                                                  const RootedHypergraph &h,
                                                  const SolverConfig &cfg,
                                                  const Tolerances &tol) {
  if (!is_connected(g0.graph) || !is_connected(h.graph))
    throw DomainError("coalescence check needs connected operands");
  const Coalescence c = coalesce_with_maps(g0, h);
  const Hypergraph &g = c.result.graph;

  const EigenResult host = least_h_eigenvalue(g0.graph, cfg);
  const EigenResult joined = least_h_eigenvalue(g, cfg);

  CoalescenceRecord rec;
  rec.lambda_host = host.lambda;
  rec.lambda_joined = joined.lambda;
  rec.converged = host.converged && joined.converged;
  rec.host_root_entry = host.vector[g0.root];
  rec.alpha_branch = alpha_h(c, joined.vector);

  rec.branch_odd_bipartite = find_odd_bipartition(h.graph).has_value();
  rec.max_branch_product = -std::numeric_limits<double>::infinity();
  for (std::size_t ei : c.second_edges)
    rec.max_branch_product =
        std::max(rec.max_branch_product, edge_product(g.edge(ei), joined.vector));

  std::vector<std::string> failures;
  if (rec.lambda_host < rec.lambda_joined - tol.eigenvalue)
    failures.push_back("lambda_min(G0) < lambda_min(G)");
  if (std::abs(rec.host_root_entry) > tol.host_entry) {
    rec.strict_checked = true;
    if (!(rec.lambda_host > rec.lambda_joined + tol.strict_margin))
      failures.push_back("strict decrease expected since y_u != 0");
  }
  if (rec.alpha_branch > tol.sign_product)
    failures.push_back("alpha_H(x) > 0");
  if (rec.branch_odd_bipartite && rec.max_branch_product > tol.sign_product)
    failures.push_back("x^e > 0 on an edge of an odd-bipartite branch");

  if (!rec.converged) {
    rec.verdict = Verdict::inconclusive;
    rec.detail = "eigen-solver did not converge";
  } else if (failures.empty()) {
    rec.verdict = Verdict::pass;
  } else {
    rec.verdict = Verdict::violation;
    for (const std::string &f : failures)
      rec.detail += f + "; ";
  }
  return rec;
}

std::vector<RelocationInstance>
relocation_instances(std::uint64_t seed, std::size_t trials,
                     const SolverConfig &cfg) {
  constexpr int k = 4;
  constexpr std::size_t max_vertices = 12;
  std::mt19937_64 rng(seed);
  std::vector<RelocationInstance> out;
  std::size_t attempts = 0;
  while (out.size() < trials) {
    if (++attempts > 50 * (trials + 1))
      throw PreconditionError("could not draw enough relocation instances");

    const std::size_t n0 = std::uniform_int_distribution<std::size_t>(4, 7)(rng);
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    Hypergraph host = random_connected_hypergraph(rng, n0, k, extra);

    // Branch: a hypertree, or a small connected non-tree hypergraph.
    const std::size_t room = max_vertices - n0 + 1;
    RootedHypergraph branch = [&]() -> RootedHypergraph {
      const bool tree = std::bernoulli_distribution(0.6)(rng) || room < 5;
      if (tree) {
        const std::size_t max_m = std::max<std::size_t>(1, (room - 1) / (k - 1));
        const std::size_t m =
            std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(max_m, 2))(rng);
        return random_hypertree(rng, m, k);
      }
      const std::size_t nb = std::uniform_int_distribution<std::size_t>(5, std::min<std::size_t>(room, 6))(rng);
      Hypergraph b = random_connected_hypergraph(rng, nb, k, 0);
      const Vertex r = std::uniform_int_distribution<Vertex>(0, nb - 1)(rng);
      return {std::move(b), r};
    }();

    const Vertex v2 = std::uniform_int_distribution<Vertex>(0, n0 - 1)(rng);
    const Hypergraph joined =
        coalesce(RootedHypergraph(host, v2), branch).graph;
    const EigenResult first = least_h_eigenvalue(joined, cfg);
    if (!first.converged)
      continue;

    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n0; ++v)
      if (v != v2 && std::abs(first.vector[v]) >= std::abs(first.vector[v2]))
        candidates.push_back(v);
    if (candidates.empty())
      continue;
    const Vertex v1 = candidates[std::uniform_int_distribution<std::size_t>(
        0, candidates.size() - 1)(rng)];
    out.push_back({std::move(host), v1, v2, std::move(branch)});
  }
  return out;
}

std::vector<CoalescenceInstance> coalescence_instances(std::uint64_t seed,
                                                       std::size_t trials) {
  constexpr int k = 4;
  constexpr std::size_t max_vertices = 12;
  std::mt19937_64 rng(seed);
  std::vector<CoalescenceInstance> out;
  while (out.size() < trials) {
    const std::size_t n0 = std::uniform_int_distribution<std::size_t>(4, 7)(rng);
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    Hypergraph host = random_connected_hypergraph(rng, n0, k, extra);
    const Vertex u = std::uniform_int_distribution<Vertex>(0, n0 - 1)(rng);

    const std::size_t room = max_vertices - n0 + 1;
    RootedHypergraph branch = [&]() -> RootedHypergraph {
      if (std::bernoulli_distribution(0.5)(rng) || room < 5) {
        const std::size_t max_m = std::max<std::size_t>(1, (room - 1) / (k - 1));
        const std::size_t m =
            std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(max_m, 2))(rng);
        return random_hypertree(rng, m, k);
      }
      const std::size_t nb = std::uniform_int_distribution<std::size_t>(5, std::min<std::size_t>(room, 6))(rng);
      Hypergraph b = random_connected_hypergraph(rng, nb, k, 1);
      const Vertex r = std::uniform_int_distribution<Vertex>(0, nb - 1)(rng);
      return {std::move(b), r};
    }();
    out.push_back({RootedHypergraph(std::move(host), u), std::move(branch)});
  }
  return out;
}

OddBipartiteRecord verify_odd_bipartite_identity(const Hypergraph &g,
                                                 const SolverConfig &cfg,
                                                 double tolerance) {
  OddBipartiteRecord rec;
  const EigenResult low = least_h_eigenvalue(g, cfg);
  const EigenResult high = spectral_radius(g, cfg);
  rec.lambda_min = low.lambda;
  rec.rho = high.lambda;
  rec.odd_bipartite = find_odd_bipartition(g).has_value();

  bool ok;
  if (rec.odd_bipartite) {
    ok = std::abs(rec.lambda_min + rec.rho) <= tolerance;
    if (!ok)
      rec.detail = "lambda_min + rho = " +
                   format_double(rec.lambda_min + rec.rho);
  } else {
    ok = rec.lambda_min >= -rec.rho - tolerance;
    if (!ok)
      rec.detail = "lambda_min below -rho";
  }
  if (!low.converged || !high.converged) {
    rec.verdict = Verdict::inconclusive;
    rec.detail = "eigen-solver did not converge";
  } else {
    rec.verdict = ok ? Verdict::pass : Verdict::violation;
  }
  return rec;
}

} // namespace hgspec
