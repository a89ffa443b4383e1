#include "hgspec/spectral.hpp"

#include "hgspec/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace hgspec {

namespace {

void check_dimension(const Hypergraph &g, const VertexVector &x) {
  if (x.size() != g.num_vertices())
    throw DomainError("vector has " + std::to_string(x.size()) +
                      " entries, hypergraph has " +
                      std::to_string(g.num_vertices()) + " vertices");
}

void require_even(const Hypergraph &g) {
  if (g.uniformity() % 2 != 0)
    throw UnsupportedUniformity(g.uniformity());
}

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i)
    r *= base;
  return r;
}

double edge_product(const Edge &e, const VertexVector &x) {
  double p = 1.0;
  for (Vertex v : e)
    p *= x[v];
  return p;
}

/// T(x) - lambda x^{[k-1]}, the eigen-equation defect per vertex.
std::vector<double> defect(const Hypergraph &g, double lambda,
                           const VertexVector &x) {
  VertexVector t = tensor_apply(g, x);
  std::vector<double> r(x.size());
  for (std::size_t v = 0; v < x.size(); ++v)
    r[v] = t[v] - lambda * ipow(x[v], g.uniformity() - 1);
  return r;
}

double max_abs(std::span<const double> r) {
  double m = 0.0;
  for (double d : r)
    m = std::max(m, std::abs(d));
  return m;
}

/// Flip so that the largest-magnitude entry (first on ties) is positive.
VertexVector canonical_sign(VertexVector x) {
  std::size_t arg = 0;
  for (std::size_t v = 1; v < x.size(); ++v)
    if (std::abs(x[v]) > std::abs(x[arg]))
      arg = v;
  if (x.size() > 0 && x[arg] < 0)
    for (std::size_t v = 0; v < x.size(); ++v)
      x[v] = -x[v];
  return x;
}

EigenResult finish(const Hypergraph &g, VertexVector x, std::size_t iters) {
  EigenResult out;
  out.vector = std::move(x);
  out.lambda = rayleigh(g, out.vector);
  out.residual = residual(g, out.lambda, out.vector);
  out.iterations = iters;
  out.converged = out.residual < kConvergedResidual;
  return out;
}

} // namespace

VertexVector::VertexVector(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_)
    if (!std::isfinite(v))
      throw DomainError("vertex vector entries must be finite");
}

double VertexVector::norm_power(int p) const {
  double s = 0.0;
  for (double v : values_)
    s += ipow(std::abs(v), p);
  return s;
}

double VertexVector::norm(int p) const {
  return std::pow(norm_power(p), 1.0 / p);
}

void SolverConfig::validate() const {
  if (restarts < 1)
    throw DomainError("restarts must be at least 1");
  if (max_iters < 1)
    throw DomainError("max_iters must be at least 1");
  if (!(gradient_tolerance > 0.0))
    throw DomainError("gradient_tolerance must be positive");
  if (step_rule != "armijo-bb")
    throw DomainError("unknown step rule '" + step_rule + "'");
}

VertexVector tensor_apply(const Hypergraph &g, const VertexVector &x) {
  check_dimension(g, x);
  const std::size_t k = static_cast<std::size_t>(g.uniformity());
  VertexVector y(x.size(), 0.0);
  std::vector<double> prefix(k + 1), suffix(k + 1);
  for (const Edge &e : g.edges()) {
    // Prefix/suffix products avoid dividing by entries that may be zero.
    prefix[0] = 1.0;
    for (std::size_t i = 0; i < k; ++i)
      prefix[i + 1] = prefix[i] * x[e[i]];
    suffix[k] = 1.0;
    for (std::size_t i = k; i > 0; --i)
      suffix[i - 1] = suffix[i] * x[e[i - 1]];
    for (std::size_t i = 0; i < k; ++i)
      y[e[i]] += prefix[i] * suffix[i + 1];
  }
  return y;
}

double rayleigh(const Hypergraph &g, const VertexVector &x) {
  check_dimension(g, x);
  double s = 0.0;
  for (const Edge &e : g.edges())
    s += edge_product(e, x);
  return g.uniformity() * s;
}

double residual(const Hypergraph &g, double lambda, const VertexVector &x) {
  check_dimension(g, x);
  return max_abs(defect(g, lambda, x));
}

VertexVector normalize_k(const VertexVector &x, int k) {
  const double nrm = x.norm(k);
  if (!(nrm > 0.0))
    throw DomainError("cannot normalise the zero vector");
  std::vector<double> out(x.data());
  for (double &v : out)
    v /= nrm;
  return VertexVector(std::move(out));
}

namespace {

EigenResult gradient_run(const Hypergraph &g, const VertexVector &x0,
                         std::size_t max_iters, double gradient_tolerance) {
  // Minimises phi(x) = A x^k / ||x||_k^k. At a unit vector its gradient is
  // k (T(x) - phi(x) x^{[k-1]}), so a vanishing gradient is exactly the
  // eigen-equation. Steps are retracted onto the sphere by k-normalisation.
  const int k = g.uniformity();
  const double armijo = 1e-4;
  const double eps = std::numeric_limits<double>::epsilon();

  VertexVector x = normalize_k(x0, k);
  double lambda = rayleigh(g, x);
  std::vector<double> r = defect(g, lambda, x);
  double step = 1.0;
  std::size_t iter = 0;

  for (; iter < max_iters; ++iter) {
    if (k * max_abs(r) < gradient_tolerance)
      break;
    const double rr = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);

    bool accepted = false;
    VertexVector trial;
    double trial_lambda = 0.0;
    for (int tries = 0; tries < 60; ++tries) {
      std::vector<double> moved(x.data());
      for (std::size_t v = 0; v < moved.size(); ++v)
        moved[v] -= step * r[v];
      trial = normalize_k(VertexVector(std::move(moved)), k);
      trial_lambda = rayleigh(g, trial);
      const double predicted = armijo * step * k * rr;
      const double noise = 16 * eps * std::max(1.0, std::abs(lambda));
      if (trial_lambda <= lambda - predicted ||
          (predicted < noise && trial_lambda <= lambda + noise)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted)
      break;

    std::vector<double> trial_r = defect(g, trial_lambda, trial);
    double ss = 0.0, sy = 0.0;
    for (std::size_t v = 0; v < r.size(); ++v) {
      const double s = trial[v] - x[v];
      const double y = trial_r[v] - r[v];
      ss += s * s;
      sy += s * y;
    }
    step = (sy > 0.0) ? std::clamp(ss / sy, 1e-10, 1e10)
                      : std::min(step * 2.0, 1e10);

    x = std::move(trial);
    lambda = trial_lambda;
    r = std::move(trial_r);
  }
  return finish(g, canonical_sign(std::move(x)), iter);
}

/// Lower lambda wins; values within kTie count as equal and the smaller
/// residual wins instead.
bool better(const EigenResult &a, const EigenResult &b) {
  constexpr double kTie = 1e-9;
  if (a.lambda < b.lambda - kTie)
    return true;
  if (b.lambda < a.lambda - kTie)
    return false;
  return a.residual < b.residual;
}

} // namespace

EigenResult descend_on_sphere(const Hypergraph &g, const VertexVector &x0,
                              std::size_t max_iters,
                              double gradient_tolerance) {
  EigenResult run = gradient_run(g, x0, max_iters, gradient_tolerance);
  if (run.converged)
    return run;

  // Minimisers with exactly vanishing entries make the objective flat to
  // fourth order there and descent crawls. Zero the small entries and
  // descend again; keep the restart only if it is no worse.
  const std::vector<double> x = run.vector.data();
  const double top = max_abs(x);
  std::size_t spent = run.iterations;
  for (double threshold : {1e-2, 1e-3, 1e-4}) {
    std::vector<double> snapped(x);
    bool changed = false;
    for (double &v : snapped)
      if (v != 0.0 && std::abs(v) < threshold * top) {
        v = 0.0;
        changed = true;
      }
    if (!changed)
      continue;
    EigenResult retry = gradient_run(g, VertexVector(std::move(snapped)),
                                     max_iters, gradient_tolerance);
    spent += retry.iterations;
    if (retry.lambda <= run.lambda + 1e-9 && retry.residual < run.residual) {
      run = std::move(retry);
      if (run.converged)
        break;
    }
  }
  run.iterations = spent;
  return run;
}

EigenResult least_h_eigenvalue(const Hypergraph &g, const SolverConfig &cfg) {
  require_even(g);
  if (g.num_edges() == 0)
    throw DomainError("least H-eigenvalue needs at least one edge");
  cfg.validate();

  EigenResult best;
  bool have_best = false;
  std::size_t total_iters = 0;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::vector<double> start(g.num_vertices());
    do {
      for (double &v : start)
        v = coord(rng);
    } while (std::all_of(start.begin(), start.end(),
                         [](double v) { return v == 0.0; }));

    EigenResult run = descend_on_sphere(g, VertexVector(start), cfg.max_iters,
                                        cfg.gradient_tolerance);
    total_iters += run.iterations;
    if (!have_best || better(run, best)) {
      best = std::move(run);
      have_best = true;
    }
  }
  best.restarts_used = cfg.restarts;
  best.iterations = total_iters;
  return best;
}

EigenResult spectral_radius(const Hypergraph &g, const SolverConfig &cfg) {
  if (g.num_edges() == 0)
    throw DomainError("spectral radius iteration needs at least one edge");
  if (!is_connected(g))
    throw DomainError("spectral radius iteration needs a connected "
                      "hypergraph (irreducible adjacency tensor)");
  cfg.validate();

  const int k = g.uniformity();
  const double shift = 1.0 + static_cast<double>(max_degree(g));
  VertexVector x = normalize_k(VertexVector(g.num_vertices(), 1.0), k);
  std::size_t iter = 0;
  double res = residual(g, rayleigh(g, x), x);
  for (; iter < cfg.max_iters && res > 1e-14; ++iter) {
    VertexVector t = tensor_apply(g, x);
    std::vector<double> next(x.size());
    for (std::size_t v = 0; v < x.size(); ++v)
      next[v] = std::pow(t[v] + shift * ipow(x[v], k - 1), 1.0 / (k - 1));
    VertexVector nx = normalize_k(VertexVector(std::move(next)), k);
    double nres = residual(g, rayleigh(g, nx), nx);
    x = std::move(nx);
    // Stagnation at the rounding floor.
    if (nres >= res && nres < 1e-12) {
      res = nres;
      ++iter;
      break;
    }
    res = nres;
  }
  EigenResult out = finish(g, std::move(x), iter);
  out.restarts_used = 1;
  return out;
}

EigenResult brute_force_min(const Hypergraph &g, std::size_t samples,
                            std::size_t refine_iters, std::uint64_t seed) {
  require_even(g);
  if (g.num_edges() == 0)
    throw DomainError("least H-eigenvalue needs at least one edge");
  const std::size_t n = g.num_vertices();
  if (n > 63)
    throw DomainError("brute-force oracle is limited to n <= 63");
  if (samples == 0)
    throw DomainError("brute-force oracle needs at least one sample");

  const int k = g.uniformity();
  constexpr std::size_t exhaustive_limit = 16;

  std::vector<std::uint64_t> edge_mask;
  for (const Edge &e : g.edges()) {
    std::uint64_t m = 0;
    for (Vertex v : e)
      m |= std::uint64_t{1} << v;
    edge_mask.push_back(m);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> magnitude(0.0, 1.0);

  // The best sign pattern of every magnitude profile is polished, so each
  // sample contributes its own basin.
  std::vector<std::vector<double>> candidates;
  std::vector<double> profile(n), edge_mag(g.num_edges());
  for (std::size_t s = 0; s < samples; ++s) {
    for (double &p : profile)
      p = magnitude(rng);
    double scale = 0.0;
    for (double p : profile)
      scale += ipow(p, k);
    if (!(scale > 0.0))
      continue;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      double m = 1.0;
      for (Vertex v : g.edge(i))
        m *= profile[v];
      edge_mag[i] = m;
    }

    double best_value = std::numeric_limits<double>::infinity();
    std::uint64_t best_signs = 0;
    auto evaluate = [&](std::uint64_t signs) {
      double value = 0.0;
      for (std::size_t i = 0; i < edge_mask.size(); ++i)
        value += (std::popcount(signs & edge_mask[i]) & 1) ? -edge_mag[i]
                                                            : edge_mag[i];
      if (value < best_value) {
        best_value = value;
        best_signs = signs;
      }
    };

    if (n <= exhaustive_limit) {
      // Vertex n-1 stays positive: x and -x give the same value.
      const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
      for (std::uint64_t signs = 0; signs < patterns; ++signs)
        evaluate(signs);
    } else {
      std::uniform_int_distribution<std::uint64_t> bits;
      const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << exhaustive_limit);
           ++i)
        evaluate(bits(rng) & mask);
    }

    std::vector<double> x(n);
    for (std::size_t v = 0; v < n; ++v)
      x[v] = ((best_signs >> v) & 1u) ? -profile[v] : profile[v];
    candidates.push_back(std::move(x));
  }

  EigenResult best;
  bool have_best = false;
  for (const std::vector<double> &c : candidates) {
    EigenResult run =
        descend_on_sphere(g, VertexVector(c), refine_iters, 1e-12);
    if (!have_best || better(run, best)) {
      best = std::move(run);
      have_best = true;
    }
  }
  best.restarts_used = static_cast<int>(candidates.size());
  return best;
}

double alpha_h(const Hypergraph &g, Vertex root,
               std::span<const std::size_t> branch_edges,
               const VertexVector &x) {
  check_dimension(g, x);
  double s = 0.0;
  for (std::size_t ei : branch_edges) {
    const Edge &e = g.edge(ei);
    if (!std::binary_search(e.begin(), e.end(), root))
      throw DomainError("branch edge " + std::to_string(ei) +
                        " does not contain the root");
    s += edge_product(e, x);
  }
  return s;
}

double alpha_h(const Coalescence &c, const VertexVector &x) {
  const Hypergraph &g = c.result.graph;
  std::vector<std::size_t> through_root;
  for (std::size_t ei : c.second_edges) {
    const Edge &e = g.edge(ei);
    if (std::binary_search(e.begin(), e.end(), c.result.root))
      through_root.push_back(ei);
  }
  return alpha_h(g, c.result.root, through_root, x);
}

std::string to_string(TransportCase c) {
  switch (c) {
  case TransportCase::positive:
    return "positive";
  case TransportCase::zero:
    return "zero";
  case TransportCase::negative:
    return "negative";
  }
  return "unknown";
}

TransportCase classify_transport(const Relocation &r, const VertexVector &x,
                                 double zero_tolerance) {
  check_dimension(r.before, x);
  const double sign = x[r.v1] < 0 ? -1.0 : 1.0;
  const double at_v2 = sign * x[r.v2];
  if (std::abs(at_v2) <= zero_tolerance)
    return TransportCase::zero;
  return at_v2 > 0 ? TransportCase::positive : TransportCase::negative;
}

TransportedVector transport_vector(const Relocation &r, const VertexVector &x,
                                   TransportCase which) {
  check_dimension(r.before, x);
  if (std::abs(x[r.v1]) < std::abs(x[r.v2]))
    throw PreconditionError("transport needs |x_v1| >= |x_v2|");

  TransportedVector out;
  out.which = which;
  std::vector<double> src(x.data());
  if (src[r.v1] < 0)
    for (double &v : src)
      v = -v;
  out.source = VertexVector(src);

  switch (which) {
  case TransportCase::positive:
    if (!(src[r.v2] > 0))
      throw PreconditionError("positive case needs x_v2 > 0");
    out.delta = src[r.v1] / src[r.v2];
    break;
  case TransportCase::negative:
    if (!(src[r.v2] < 0))
      throw PreconditionError("negative case needs x_v2 < 0");
    out.delta = -src[r.v1] / src[r.v2];
    break;
  case TransportCase::zero:
    out.delta = 1.0;
    break;
  }

  const double factor = which == TransportCase::negative ? -out.delta
                        : which == TransportCase::positive ? out.delta
                                                           : 1.0;
  std::vector<double> moved = src;
  for (Vertex v : r.branch_vertices)
    moved[v] *= factor;
  out.vector = VertexVector(std::move(moved));

  // Split E_G(v2) into branch and host edges.
  std::vector<bool> is_branch(r.before.num_edges(), false);
  for (std::size_t ei : r.branch_edges)
    is_branch[ei] = true;
  for (std::size_t ei : r.before.incident(r.v2)) {
    const double p = edge_product(r.before.edge(ei), out.source);
    (is_branch[ei] ? out.alpha_branch : out.gamma_host) += p;
  }
  return out;
}

} // namespace hgspec
