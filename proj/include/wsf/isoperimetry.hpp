#pragma once

#include <span>
#include <string>
#include <vector>

#include "wsf/connected_subsets.hpp"
#include "wsf/linear_solver.hpp"
#include "wsf/network.hpp"
#include "wsf/profile.hpp"

namespace wsf {

enum class BoundaryVariant {
  edge,      // all of the edge boundary
  infinite,  // only boundary edges into components holding the wired vertex
};

BoundaryVariant parse_boundary_variant(const std::string& text);

struct ProfileOptions {
  BoundaryVariant variant = BoundaryVariant::edge;
  PiConvention convention = PiConvention::oriented_tail;
  int vertex_cap = 16;
};

/// Candidate sets K for kappa(G, A, t) on a finite network: nonempty,
/// connected, containing A, avoiding the wired vertex, and different from
/// the whole vertex set (whose boundary is empty).
///
/// Every candidate as (pi(K), boundary) pairs folded into a step profile:
/// kappa(t) = least boundary over candidates with t <= pi(K).
Profile profile_table(const Network& g, std::span<const VertexId> a, const ProfileOptions& options = {});

/// kappa(G, A, t) by exhaustive search; +inf when no candidate has
/// pi(K) >= t.
double profile_brute(const Network& g, std::span<const VertexId> a, double t, const ProfileOptions& options = {});

/// |boundary of K| under the chosen variant.
double boundary_conductance(const Network& g, VertexMask k, BoundaryVariant variant);

struct FiniteHsResult {
  double bound = 0.0;
  double exact = 0.0;            // ER(a, z)
  std::vector<double> s;         // s_0, s_1, ... while kappa(s_k) is finite
  std::vector<double> kappa;     // kappa(s_k)
  bool holds = false;            // bound >= exact
};

/// The finite resistance bound with kappa(t) = min |boundary K| over
/// connected K with a in K, z not in K, t <= pi(K); s_0 = pi(a).
FiniteHsResult finite_hs_bound(const Network& g, VertexId a, VertexId z, int vertex_cap = 20,
                               const SolveOptions& options = {});

struct GoodSubsetResult {
  std::vector<VertexId> w;        // W(K)
  double boundary = 0.0;          // |boundary W|
  bool connected = false;
  long long certificate_sets = 0; // sets U checked against the half-boundary inequality
  bool certificate_ok = true;
  double worst_ratio = kInfinity; // least |boundary' U| / |boundary U| seen
};

/// W(K): minimizer of |boundary L| over L containing K and its outer vertex
/// boundary, L avoiding the wired vertex (ties: fewer vertices, then the
/// least bitmask). Certifies |boundary' U| >= |boundary U| / 2 for every
/// nonempty U outside W and the wired vertex (boundary' taken in G \ W).
GoodSubsetResult good_subset(const Network& g, std::span<const VertexId> k, int vertex_cap = 20);

struct GoodSubsetInequality {
  bool holds = true;
  double worst_ratio = kInfinity;  // least kappa(G \ W, t) / kappa(G, t) over breakpoints
  double worst_t = 0.0;
  int breakpoints = 0;
};

/// Checks kappa(G \ W, t) >= kappa(G, t) / 2 at every breakpoint of either
/// step profile, which covers all t > 0.
GoodSubsetInequality good_subset_inequality(const Network& g, std::span<const VertexId> w, int vertex_cap = 16);

struct ConditionRow {
  int radius = 0;
  double vertex_min = 0.0;                // least EC(v, wired; box \ V_n) over sampled v
  std::vector<double> band_pi;            // pi(K) of sampled cubes K
  std::vector<double> band_conductance;   // EC(K, wired; box \ V_n)
};

struct ConditionReport {
  int dimension = 0;
  std::vector<ConditionRow> rows;
  bool vertex_bounded_below = false;  // vertex minima stay above half the first one
  bool bands_increasing = false;      // EC grows along pi(K) in every row
};

/// Diagnostics for the vertex and set conditions on wired boxes with
/// V_n = B_{floor(r * inner_fraction)} removed.
ConditionReport condition_diagnostics(int dimension, std::span<const int> radii, double inner_fraction = 0.25,
                                      const SolveOptions& options = {});

}  // namespace wsf
