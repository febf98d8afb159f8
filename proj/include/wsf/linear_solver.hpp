#pragma once

#include <span>
#include <vector>

#include "wsf/network.hpp"

namespace wsf {

enum class SolveMethod { conjugate_gradient, direct };

struct SolveOptions {
  SolveMethod method = SolveMethod::conjugate_gradient;
  double tolerance = 1e-10;   // relative residual
  int max_iterations = 0;     // 0: 2 * unknowns + 1000
  int direct_fallback_limit = 2000;
};

struct SolveStats {
  int iterations = 0;
  double relative_residual = 0.0;
  SolveMethod method = SolveMethod::conjugate_gradient;
  int unknowns = 0;
};

/// Solves the Dirichlet problem for the network Laplacian: on entry `f`
/// holds the prescribed values where `fixed` is set (and an initial guess
/// elsewhere); on exit `f` is harmonic off the fixed set.
///
/// Conjugate gradient with a Jacobi preconditioner runs on the grounded
/// Laplacian (fixed rows and columns eliminated). If it fails to converge on
/// a system with at most `direct_fallback_limit` unknowns the dense Cholesky
/// path is used instead. Throws NoUniqueSolution when some free vertex
/// cannot reach the fixed set, SolverError on non-convergence.
SolveStats solve_dirichlet(const Network& g, std::span<const char> fixed, std::vector<double>& f,
                           const SolveOptions& options = {});

}  // namespace wsf
