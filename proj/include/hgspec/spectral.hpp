#pragma once

#include "hgspec/constructions.hpp"
#include "hgspec/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hgspec {

/// Real vector indexed by the vertices of a host hypergraph.
class VertexVector {
public:
  VertexVector() = default;
  explicit VertexVector(std::size_t n, double fill = 0.0) : values_(n, fill) {}
  /// Throws DomainError on non-finite entries.
  explicit VertexVector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](Vertex v) const { return values_[v]; }
  double &operator[](Vertex v) { return values_[v]; }

  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double> &data() const noexcept { return values_; }

  /// (sum |x_v|^p)^(1/p).
  double norm(int p) const;
  /// sum |x_v|^p, without the final root.
  double norm_power(int p) const;

  friend bool operator==(const VertexVector &, const VertexVector &) = default;

private:
  std::vector<double> values_;
};

/// Result of an eigenvalue computation. The vector has unit k-norm and
/// `residual` is the max-norm of A x^{k-1} - lambda x^{[k-1]}.
struct EigenResult {
  double lambda = 0.0;
  VertexVector vector;
  double residual = 0.0;
  int restarts_used = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct SolverConfig {
  int restarts = 256;
  std::size_t max_iters = 20000;
  double gradient_tolerance = 1e-10;
  /// Only "armijo-bb" (Barzilai-Borwein trial step, Armijo backtracking).
  std::string step_rule = "armijo-bb";
  std::uint64_t seed = 0;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

/// Residual below which an eigenpair counts as converged.
inline constexpr double kConvergedResidual = 1e-8;

/// (A(G) x^{k-1})_v = sum over e containing v of prod_{w in e, w != v} x_w.
VertexVector tensor_apply(const Hypergraph &g, const VertexVector &x);

/// A(G) x^k = k * sum_e prod_{v in e} x_v.
double rayleigh(const Hypergraph &g, const VertexVector &x);

/// max_v |(A x^{k-1})_v - lambda x_v^{k-1}|.
double residual(const Hypergraph &g, double lambda, const VertexVector &x);

/// x / ||x||_k. Throws DomainError on the zero vector.
VertexVector normalize_k(const VertexVector &x, int k);

/// Minimum of A x^k over the unit k-norm sphere, by multi-restart projected
/// gradient descent. Requires even k and at least one edge.
EigenResult least_h_eigenvalue(const Hypergraph &g, const SolverConfig &cfg = {});

/// Perron eigenpair of A(G) by shifted nonnegative power iteration.
/// Requires a connected hypergraph with at least one edge.
EigenResult spectral_radius(const Hypergraph &g, const SolverConfig &cfg = {});

/// Independent minimiser: evaluates every sign pattern of `samples`
/// random magnitude profiles (sign patterns are themselves sampled when
/// n > 16), then polishes the best pattern of each profile by descent.
EigenResult brute_force_min(const Hypergraph &g, std::size_t samples,
                            std::size_t refine_iters, std::uint64_t seed);

/// Single projected-gradient descent run from x0 (no restarts).
EigenResult descend_on_sphere(const Hypergraph &g, const VertexVector &x0,
                              std::size_t max_iters, double gradient_tolerance);

/// sum over the listed edges of the full product x^e. Each listed edge
/// must contain root.
double alpha_h(const Hypergraph &g, Vertex root,
               std::span<const std::size_t> branch_edges,
               const VertexVector &x);

/// alpha_H for a coalescence G0(u) <> H(u): branch edges through the root.
double alpha_h(const Coalescence &c, const VertexVector &x);

enum class TransportCase { positive, zero, negative };

std::string to_string(TransportCase c);

/// Sign of x at v2 after flipping x so that x_{v1} >= 0; |x_{v2}| <=
/// zero_tolerance counts as zero.
TransportCase classify_transport(const Relocation &r, const VertexVector &x,
                                 double zero_tolerance);

struct TransportedVector {
  VertexVector vector;       // x~ on the relocated graph
  VertexVector source;       // x, sign-flipped so that x_{v1} >= 0
  TransportCase which = TransportCase::zero;
  double delta = 1.0;        // |x_{v1}| / |x_{v2}|, 1 in the zero case
  double gamma_host = 0.0;   // sum over E_{G0}(v2) of x^e
  double alpha_branch = 0.0; // sum over E_H(v2) of x^e
};

/// Builds x~ on r.after from x on r.before: host entries are copied and
/// the branch entries scaled by delta (positive case), copied (zero case)
/// or scaled by -delta (negative case).
/// Throws PreconditionError when |x_{v1}| < |x_{v2}| or the requested case
/// contradicts the sign of x_{v2}.
TransportedVector transport_vector(const Relocation &r, const VertexVector &x,
                                   TransportCase which);

} // namespace hgspec
