#include "wsf/electrical.hpp"

#include <cmath>
#include <stdexcept>

#include "wsf/lattice.hpp"

namespace wsf {

double Potential::gradient(const OrientedEdge& e) const {
  return g_->edge(e.id).conductance * (values_[e.head] - values_[e.tail]);
}

double Potential::laplacian(VertexId x) const {
  double s = 0.0;
  for (const Incidence& inc : g_->incident(x))
    s += g_->edge(inc.edge).conductance * (values_[inc.neighbor] - values_[x]);
  return s;
}

double Potential::dirichlet_energy() const {
  // Each undirected edge appears twice among oriented edges, cancelling the 1/2.
  double s = 0.0;
  for (const Edge& e : g_->edges()) {
    const double diff = values_[e.v] - values_[e.u];
    s += e.conductance * diff * diff;
  }
  return s;
}

Flow Flow::gradient_of(const Potential& f) {
  const Network& g = f.network();
  std::vector<double> vals(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) vals[e] = f.gradient(g.oriented(e));
  return Flow(g, std::move(vals));
}

double Flow::divergence(VertexId x) const {
  double s = 0.0;
  for (const Incidence& inc : g_->incident(x)) s += (*this)(g_->oriented_from(inc.edge, x));
  return s;
}

double Flow::inner(const Flow& other) const {
  double s = 0.0;
  for (EdgeId e = 0; e < g_->edge_count(); ++e)
    s += values_[e] * other.values_[e] / g_->edge(e).conductance;
  return s;
}

namespace {

void check_terminals(const Network& g, std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("terminal sets must be nonempty");
  const auto in_a = vertex_mask(g.vertex_count(), a);
  for (VertexId v : b)
    if (in_a[v]) throw std::invalid_argument("terminal sets must be disjoint");
}

// Current leaving A summed over A: sum of the laplacian of f on A.
double current_out_of(const Potential& f, std::span<const VertexId> a) {
  const auto in_a = vertex_mask(f.network().vertex_count(), a);
  double s = 0.0;
  for (VertexId v = 0; v < f.network().vertex_count(); ++v)
    if (in_a[v]) s += f.laplacian(v);
  return s;
}

}  // namespace

VoltageSolution harmonic_voltage(const Network& g, std::span<const VertexId> a,
                                 std::span<const VertexId> b, const SolveOptions& options) {
  check_terminals(g, a, b);
  std::vector<char> fixed(g.vertex_count(), 0);
  std::vector<double> f(g.vertex_count(), 0.5);
  for (VertexId v : a) {
    fixed[v] = 1;
    f[v] = 0.0;
  }
  for (VertexId v : b) {
    fixed[v] = 1;
    f[v] = 1.0;
  }
  const SolveStats stats = solve_dirichlet(g, fixed, f, options);
  return {Potential(g, std::move(f)), stats};
}

double effective_conductance(const Network& g, std::span<const VertexId> a,
                             std::span<const VertexId> b, const SolveOptions& options,
                             SolveStats* stats) {
  VoltageSolution sol = harmonic_voltage(g, a, b, options);
  if (stats) *stats = sol.stats;
  return sol.voltage.dirichlet_energy();
}

double effective_resistance(const Network& g, std::span<const VertexId> a,
                            std::span<const VertexId> b, const SolveOptions& options,
                            SolveStats* stats) {
  return 1.0 / effective_conductance(g, a, b, options, stats);
}

Flow unit_current_flow(const Network& g, std::span<const VertexId> a, std::span<const VertexId> b,
                       const SolveOptions& options) {
  VoltageSolution sol = harmonic_voltage(g, a, b, options);
  const double out = current_out_of(sol.voltage, a);
  Flow grad = Flow::gradient_of(sol.voltage);
  std::vector<double> vals = grad.values();
  if (out > 0.0)
    for (double& x : vals) x /= out;
  return Flow(g, std::move(vals));
}

double effective_conductance_tolerant(const Network& g, std::span<const VertexId> a,
                                      std::span<const VertexId> b, const SolveOptions& options) {
  check_terminals(g, a, b);
  const VertexId n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack(a.begin(), a.end());
  for (VertexId v : a) seen[v] = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x))
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
  }
  bool joined = false;
  for (VertexId v : b) joined = joined || seen[v];
  if (!joined) return 0.0;

  std::vector<VertexId> drop;
  for (VertexId v = 0; v < n; ++v)
    if (!seen[v]) drop.push_back(v);
  if (drop.empty()) return effective_conductance(g, a, b, options);
  const DeleteResult kept = delete_vertices(g, drop);
  std::vector<VertexId> a2, b2;
  for (VertexId v : a) a2.push_back(kept.vertex_map[v]);
  for (VertexId v : b)
    if (seen[v]) b2.push_back(kept.vertex_map[v]);
  return effective_conductance(kept.network, a2, b2, options);
}

double conductance_to_wired(const Network& g, std::span<const VertexId> a,
                            const SolveOptions& options, SolveStats* stats) {
  if (!g.wired_vertex()) throw std::invalid_argument("network has no wired vertex");
  const VertexId w = *g.wired_vertex();
  for (VertexId v : a)
    if (v == w) throw std::invalid_argument("source set contains the wired vertex");
  const VertexId target[] = {w};
  return effective_conductance(g, a, target, options, stats);
}

ConductanceSequence conductance_to_wired_sequence(int dimension, std::span<const int> radii,
                                                  const SolveOptions& options) {
  ConductanceSequence out;
  out.dimension = dimension;
  for (int r : radii) {
    const Network box = build_lattice_box({dimension, r, BoundaryMode::wired});
    const VertexId o[] = {lattice_origin(dimension, r)};
    out.radii.push_back(r);
    out.values.push_back(conductance_to_wired(box, o, options));
  }
  for (std::size_t i = 1; i < out.values.size(); ++i)
    if (out.values[i] > out.values[i - 1] * (1.0 + 1e-9)) out.nonincreasing = false;
  if (out.values.size() >= 2) {
    const double last = out.values.back();
    out.relative_gap = std::abs(last - out.values[out.values.size() - 2]) / last;
  }
  return out;
}

namespace {

bool is_bridge(const Network& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{ed.u};
  seen[ed.u] = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      if (inc.edge == e || seen[inc.neighbor]) continue;
      if (inc.neighbor == ed.v) return false;
      seen[inc.neighbor] = 1;
      stack.push_back(inc.neighbor);
    }
  }
  return true;
}

}  // namespace

double kirchhoff_edge_probability(const Network& g, EdgeId e, const SolveOptions& options) {
  if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge out of range");
  const Edge& ed = g.edge(e);
  if (ed.u == ed.v) throw std::invalid_argument("self-loop has no inclusion probability");
  if (is_bridge(g, e)) return 1.0;
  const VertexId a[] = {ed.u};
  const VertexId b[] = {ed.v};
  return ed.conductance * effective_resistance(g, a, b, options);
}

Potential green_function(const Network& box, VertexId v, const SolveOptions& options) {
  if (!box.wired_vertex()) throw std::invalid_argument("green_function needs a wired network");
  const VertexId w = *box.wired_vertex();
  if (v == w) throw std::invalid_argument("green_function: source is the wired vertex");
  const VertexId a[] = {v};
  const VertexId b[] = {w};
  VoltageSolution sol = harmonic_voltage(box, a, b, options);
  const double resistance = 1.0 / sol.voltage.dirichlet_energy();
  const double scale = box.pi(v) * resistance;
  std::vector<double> g(box.vertex_count());
  for (VertexId x = 0; x < box.vertex_count(); ++x) g[x] = scale * (1.0 - sol.voltage(x));
  return Potential(box, std::move(g));
}

}  // namespace wsf
