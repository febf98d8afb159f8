#pragma once

#include <span>
#include <vector>

#include "wsf/linear_solver.hpp"
#include "wsf/network.hpp"

namespace wsf {

/// Function on the vertices of a network. Holds a non-owning pointer; the
/// network must outlive it.
class Potential {
 public:
  Potential() = default;
  Potential(const Network& g, std::vector<double> values) : g_(&g), values_(std::move(values)) {}

  const Network& network() const { return *g_; }
  double operator()(VertexId v) const { return values_[v]; }
  const std::vector<double>& values() const { return values_; }

  /// c(e) (f(head) - f(tail)).
  double gradient(const OrientedEdge& e) const;
  /// Sum over oriented edges leaving x of the gradient.
  double laplacian(VertexId x) const;
  /// D(f) = (grad f, grad f)_r.
  double dirichlet_energy() const;

 private:
  const Network* g_ = nullptr;
  std::vector<double> values_;
};

/// Antisymmetric edge function, stored once per edge in its u -> v direction.
class Flow {
 public:
  Flow() = default;
  Flow(const Network& g, std::vector<double> values) : g_(&g), values_(std::move(values)) {}

  /// grad f as a flow.
  static Flow gradient_of(const Potential& f);

  const Network& network() const { return *g_; }
  double operator()(const OrientedEdge& e) const {
    return e.reversed ? -values_[e.id] : values_[e.id];
  }
  double on_edge(EdgeId e) const { return values_[e]; }
  const std::vector<double>& values() const { return values_; }

  double divergence(VertexId x) const;
  /// (theta, theta')_r = 1/2 sum over oriented edges of r(e) theta(e) theta'(e).
  double inner(const Flow& other) const;
  double energy() const { return inner(*this); }

 private:
  const Network* g_ = nullptr;
  std::vector<double> values_;
};

struct VoltageSolution {
  Potential voltage;
  SolveStats stats;
};

/// f = 0 on A, f = 1 on B, harmonic elsewhere.
VoltageSolution harmonic_voltage(const Network& g, std::span<const VertexId> a,
                                 std::span<const VertexId> b, const SolveOptions& options = {});

/// Minimum Dirichlet energy over f = 0 on A, 1 on B.
double effective_conductance(const Network& g, std::span<const VertexId> a,
                             std::span<const VertexId> b, const SolveOptions& options = {},
                             SolveStats* stats = nullptr);
double effective_resistance(const Network& g, std::span<const VertexId> a,
                            std::span<const VertexId> b, const SolveOptions& options = {},
                            SolveStats* stats = nullptr);

/// Energy-minimizing unit flow from A to B.
Flow unit_current_flow(const Network& g, std::span<const VertexId> a, std::span<const VertexId> b,
                       const SolveOptions& options = {});

/// EC(A, B) allowing components that miss A or B (they carry no current).
/// Returns 0 when no path joins A and B.
double effective_conductance_tolerant(const Network& g, std::span<const VertexId> a,
                                      std::span<const VertexId> b, const SolveOptions& options = {});

/// EC(A, wired vertex): the finite-volume conductance to infinity.
double conductance_to_wired(const Network& g, std::span<const VertexId> a,
                            const SolveOptions& options = {}, SolveStats* stats = nullptr);

struct ConductanceSequence {
  int dimension = 0;
  std::vector<int> radii;
  std::vector<double> values;
  /// |v_last - v_prev| / v_last over the two largest radii.
  double relative_gap = 0.0;
  bool nonincreasing = true;
};

/// EC(origin, wired) on wired Z^d boxes of increasing radius.
ConductanceSequence conductance_to_wired_sequence(int dimension, std::span<const int> radii,
                                                  const SolveOptions& options = {});

/// P[e in T] = c(e) ER(e-, e+). Bridges return exactly 1.
double kirchhoff_edge_probability(const Network& g, EdgeId e, const SolveOptions& options = {});

/// Green function of the walk killed at the wired vertex, started at v:
/// g = pi(v) ER(v, wired) (1 - h) with h the voltage from v (0) to the
/// wired vertex (1). -grad g / pi(v) is the unit current from v to the
/// wired vertex; for unit-conductance Z^d boxes pi(v) = 2d.
Potential green_function(const Network& box, VertexId v, const SolveOptions& options = {});

}  // namespace wsf
