#pragma once

#include <span>
#include <vector>

#include "wsf/network.hpp"

namespace wsf {

/// The past Q of x: union of the components of T_x \ x that miss the wired
/// vertex. For a tree rooted at the wired vertex these are the descendants
/// of x.
struct PastSummary {
  std::vector<VertexId> vertices;  // Q, excluding x
  double euclidean_diameter = 0.0;
  int sup_diameter = 0;
  int graph_diameter = 0;          // largest lattice (L1) distance within Q
  bool reached_boundary = false;   // Q holds a vertex with |z|_inf = r
  int truncation_radius = 0;
};

/// Scratch-reusing evaluator; one per worker.
class PastFinder {
 public:
  explicit PastFinder(const Network& wired_box);

  /// `parent_edge` is a spanning tree rooted at the wired vertex.
  PastSummary past_of(std::span<const EdgeId> parent_edge, VertexId x);

 private:
  const Network* g_;
  int radius_ = 0;
  std::vector<signed char> state_;
  std::vector<VertexId> walk_;
};

/// One-shot form of PastFinder::past_of for a rooted forest.
PastSummary past_of(const Network& wired_box, std::span<const EdgeId> parent_edge, VertexId x);

/// Largest Euclidean distance among lattice points. Points that are not
/// extreme on each of their axis-parallel lines cannot be diameter
/// endpoints and are discarded before the pairwise scan.
double euclidean_diameter(int dimension, std::span<const int> coords);

/// Largest L1 distance among lattice points.
int l1_diameter(int dimension, std::span<const int> coords);

/// Largest coordinate range over the axes.
int sup_diameter(int dimension, std::span<const int> coords);

}  // namespace wsf
