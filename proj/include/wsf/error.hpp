#pragma once

#include <stdexcept>
#include <string>

namespace wsf {

// Invalid inputs are reported with std::invalid_argument. The classes below
// cover the remaining failure modes.

/// A configured size cap (vertex count, enumeration budget) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear solve did not reach the requested residual.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

/// The Dirichlet problem has no unique solution (a component misses A and B).
class NoUniqueSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampler was given a disconnected network.
class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph(const std::string& what, int unreachable_vertex)
      : std::runtime_error(what), vertex_(unreachable_vertex) {}

  int unreachable_vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

}  // namespace wsf
