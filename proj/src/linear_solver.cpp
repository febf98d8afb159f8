#include "wsf/linear_solver.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wsf/error.hpp"

namespace wsf {

namespace {

// Grounded Laplacian restricted to the free vertices, in CSR form.
struct GroundedSystem {
  std::vector<VertexId> free_vertices;
  std::vector<int> local;   // vertex -> local index or -1
  std::vector<int> row_start;
  std::vector<int> col;
  std::vector<double> val;  // off-diagonal conductances (positive)
  std::vector<double> diag;
  std::vector<double> rhs;

  int size() const { return static_cast<int>(free_vertices.size()); }

  void multiply(const std::vector<double>& x, std::vector<double>& y) const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
      double s = diag[i] * x[i];
      for (int k = row_start[i]; k < row_start[i + 1]; ++k) s -= val[k] * x[col[k]];
      y[i] = s;
    }
  }
};

GroundedSystem assemble(const Network& g, std::span<const char> fixed, const std::vector<double>& f) {
  GroundedSystem sys;
  sys.local.assign(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!fixed[v]) {
      sys.local[v] = static_cast<int>(sys.free_vertices.size());
      sys.free_vertices.push_back(v);
    }
  }
  const int n = sys.size();
  sys.row_start.assign(n + 1, 0);
  sys.diag.assign(n, 0.0);
  sys.rhs.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const VertexId v = sys.free_vertices[i];
    sys.diag[i] = g.pi(v);
    for (const Incidence& inc : g.incident(v)) {
      const double c = g.edge(inc.edge).conductance;
      const int j = sys.local[inc.neighbor];
      if (j >= 0) {
        sys.col.push_back(j);
        sys.val.push_back(c);
      } else {
        sys.rhs[i] += c * f[inc.neighbor];
      }
    }
    sys.row_start[i + 1] = static_cast<int>(sys.col.size());
  }
  return sys;
}

void require_reachable(const Network& g, std::span<const char> fixed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (fixed[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v])
      throw NoUniqueSolution("vertex " + g.vertex_name(v) +
                             " lies in a component without boundary values");
  }
}

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double relative_residual(const GroundedSystem& sys, const std::vector<double>& x) {
  std::vector<double> ax(sys.size());
  sys.multiply(x, ax);
  double s = 0.0;
  for (int i = 0; i < sys.size(); ++i) {
    const double r = sys.rhs[i] - ax[i];
    s += r * r;
  }
  const double b = norm(sys.rhs);
  return b > 0.0 ? std::sqrt(s) / b : std::sqrt(s);
}

SolveStats solve_direct(const GroundedSystem& sys, std::vector<double>& x) {
  const int n = sys.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = sys.diag[i];
    for (int k = sys.row_start[i]; k < sys.row_start[i + 1]; ++k) a(i, sys.col[k]) -= sys.val[k];
    b(i) = sys.rhs[i];
  }
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) throw SolverError("Cholesky factorization failed", 1.0, 0);
  const Eigen::VectorXd sol = llt.solve(b);
  for (int i = 0; i < n; ++i) x[i] = sol(i);
  SolveStats stats;
  stats.method = SolveMethod::direct;
  stats.unknowns = n;
  stats.relative_residual = relative_residual(sys, x);
  return stats;
}

bool solve_cg(const GroundedSystem& sys, std::vector<double>& x, const SolveOptions& opt,
              SolveStats& stats) {
  const int n = sys.size();
  stats.method = SolveMethod::conjugate_gradient;
  stats.unknowns = n;
  const double bnorm = norm(sys.rhs);
  if (bnorm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    stats.relative_residual = 0.0;
    return true;
  }
  std::vector<double> r(n), z(n), p(n), ap(n);
  sys.multiply(x, ap);
  for (int i = 0; i < n; ++i) r[i] = sys.rhs[i] - ap[i];
  for (int i = 0; i < n; ++i) z[i] = r[i] / sys.diag[i];
  p = z;
  double rz = 0.0;
  for (int i = 0; i < n; ++i) rz += r[i] * z[i];

  const int max_it = opt.max_iterations > 0 ? opt.max_iterations : 2 * n + 1000;
  const double target = opt.tolerance * bnorm;
  double rnorm = norm(r);
  int it = 0;
  while (rnorm > target && it < max_it) {
    sys.multiply(p, ap);
    double pap = 0.0;
    for (int i = 0; i < n; ++i) pap += p[i] * ap[i];
    if (!(pap > 0.0)) break;
    const double alpha = rz / pap;
    double rr = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
      rr += r[i] * r[i];
    }
    rnorm = std::sqrt(rr);
    ++it;
    // Periodically replace the recursive residual by the true one.
    if (it % 500 == 0) {
      sys.multiply(x, ap);
      for (int i = 0; i < n; ++i) r[i] = sys.rhs[i] - ap[i];
      rnorm = norm(r);
    }
    double rz_new = 0.0;
    for (int i = 0; i < n; ++i) {
      z[i] = r[i] / sys.diag[i];
      rz_new += r[i] * z[i];
    }
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  stats.iterations = it;
  stats.relative_residual = relative_residual(sys, x);
  return stats.relative_residual <= opt.tolerance;
}

}  // namespace

SolveStats solve_dirichlet(const Network& g, std::span<const char> fixed, std::vector<double>& f,
                           const SolveOptions& options) {
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
  if (fixed.size() != static_cast<std::size_t>(g.vertex_count()) ||
      f.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("solve_dirichlet: size mismatch");
  require_reachable(g, fixed);

  const GroundedSystem sys = assemble(g, fixed, f);
  const int n = sys.size();
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = f[sys.free_vertices[i]];

  SolveStats stats;
  if (n == 0) {
    stats.method = options.method;
    return stats;
  }
  if (options.method == SolveMethod::direct) {
    stats = solve_direct(sys, x);
  } else if (!solve_cg(sys, x, options, stats)) {
    if (n <= options.direct_fallback_limit) {
      const int cg_iterations = stats.iterations;
      stats = solve_direct(sys, x);
      stats.iterations = cg_iterations;
    } else {
      throw SolverError("conjugate gradient did not converge (relative residual " +
                            std::to_string(stats.relative_residual) + ")",
                        stats.relative_residual, stats.iterations);
    }
  }
  for (int i = 0; i < n; ++i) f[sys.free_vertices[i]] = x[i];
  return stats;
}

}  // namespace wsf
