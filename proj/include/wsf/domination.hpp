#pragma once

#include <vector>

#include "wsf/network.hpp"
#include "wsf/sampling.hpp"

namespace wsf {

/// A finite law on edge sets (masks over the edge ids of the base network).
struct EdgeSetLaw {
  std::vector<EdgeMask> outcomes;
  std::vector<double> mass;

  double expected_size() const;
};

struct CouplingEntry {
  int lower;  // index into the dominated law
  int upper;  // index into the dominating law
  double mass;
};

struct Coupling {
  bool feasible = false;
  double transported = 0.0;
  std::vector<CouplingEntry> witness;
};

/// Largest mass movable from `lower` to `upper` along pairs A -> B with A a
/// subset of B; feasible when it reaches 1 - 1e-9. Both laws have total
/// mass 1.
Coupling monotone_coupling(const EdgeSetLaw& lower, const EdgeSetLaw& upper);

struct DominationReport {
  bool feasible = false;
  double transported = 0.0;  // max-flow value; 1 when a monotone coupling exists
  EdgeSetLaw lower;          // law of T \ L(T), L(T) the x-y path of the UST T of G
  EdgeSetLaw upper;          // law of the UST of G/{x,y}, edges named by G's ids
  std::vector<CouplingEntry> witness;
};

/// Decides whether the UST of G/{x,y} stochastically dominates T \ L(T)
/// under edge-set inclusion: a monotone (Strassen) coupling exists iff the
/// bipartite transport with arcs A -> B for A subset of B carries all mass.
DominationReport domination_check(const Network& g, VertexId x, VertexId y, int edge_cap = 24);

/// Exact law of the UST of g as an EdgeSetLaw over g's edge labels.
EdgeSetLaw ust_law_by_label(const Network& g, int edge_cap = 24);

}  // namespace wsf
