#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wsf/forest.hpp"
#include "wsf/lattice.hpp"
#include "wsf/linear_solver.hpp"
#include "wsf/network.hpp"
#include "wsf/rng.hpp"
#include "wsf/wilson.hpp"

namespace wsf {

/// Weighted uniform spanning tree: P[T] proportional to prod c(e).
Forest wilson_ust(const Network& g, VertexId root, RngStream& rng);

/// UST of a finite network as-is (free boundary), rooted at vertex 0.
Forest sample_free(const Network& g, RngStream& rng);

/// UST of a wired network, with the interior restricted forest. Every
/// interior component touching the wired vertex is flagged as pointing
/// toward infinity.
struct WiredForest {
  Forest tree;
  std::vector<int> component;          // interior component per vertex, -1 at the wired vertex
  std::vector<char> infinite_direction;  // per interior component
  int truncation_radius = 0;
};

WiredForest sample_wired(const Network& wired, RngStream& rng);

/// Sample of WSF_o restricted to a box: UST of the box with o and the
/// exterior identified.
struct RootWiredSample {
  Forest tree;                          // on the merged network
  std::vector<VertexId> origin_component;  // box vertices of F(o), o first
  std::vector<EdgeId> origin_edges;        // box edge ids of F(o)
  int max_sup_norm = 0;                    // largest |x|_inf over F(o)
};

/// Reusable WSF_o sampler on a wired Z^d box.
class RootWiredSampler {
 public:
  /// `o` must be an interior point of the box (|o|_inf < r).
  RootWiredSampler(int dimension, int radius, std::span<const int> o);

  RootWiredSampler(const RootWiredSampler&) = delete;
  RootWiredSampler& operator=(const RootWiredSampler&) = delete;

  RootWiredSample sample(RngStream& rng);

  const Network& box() const { return box_; }
  const Network& merged() const { return merged_; }
  VertexId origin() const { return origin_; }
  int radius() const { return radius_; }

 private:
  int radius_;
  Network box_;
  Network merged_;
  std::vector<VertexId> to_merged_;
  std::vector<VertexId> to_box_;  // merged vertex -> box vertex (merged vertex -> o)
  VertexId origin_;
  VertexId merged_root_;
  WilsonSampler wilson_;
  std::vector<EdgeId> parents_;
  std::vector<signed char> state_;
  std::vector<VertexId> walk_;
};

RootWiredSample sample_wsf_o(const LatticeBoxSpec& spec, std::span<const int> o, RngStream& rng);

// ---------------------------------------------------------------------------
// Exact laws for small networks.

using EdgeMask = std::uint64_t;

struct SpanningTreeEntry {
  EdgeMask edges;  // bit i <=> edge id i
  double weight;   // product of conductances
};

struct SpanningDistribution {
  std::vector<SpanningTreeEntry> trees;
  double normalizer = 0.0;
  double matrix_tree_determinant = 0.0;

  double probability(std::size_t i) const { return trees[i].weight / normalizer; }
};

/// Every spanning tree with its weight. Throws ResourceError when the edge
/// count exceeds `edge_cap` (at most 64).
SpanningDistribution enumerate_spanning_trees(const Network& g, int edge_cap = 24);

/// Weighted matrix-tree theorem: det of the Laplacian with one row and
/// column removed.
double weighted_tree_count(const Network& g);

struct ConditionedNetwork {
  Network network;
  std::vector<VertexId> vertex_map;
};

/// G/e when `present`, G \ e otherwise. Labels are kept so further
/// conditioning composes. Removing a bridge throws std::invalid_argument.
ConditionedNetwork condition_on_edge(const Network& g, EdgeId e, bool present);

/// Edge of g with the given label, or kNoEdge.
EdgeId find_edge_by_label(const Network& g, std::int64_t label);

/// P[present edges in T, absent edges not in T] as a product of conditional
/// Kirchhoff probabilities along a chain of conditionings.
double configuration_probability(const Network& g, std::span<const EdgeId> present,
                                 std::span<const EdgeId> absent, const SolveOptions& options = {});

/// Exact UST sampler deciding edges in id order, each with its conditional
/// Kirchhoff probability. Slow; a reference for the Wilson sampler.
std::vector<char> sample_by_conditioning(const Network& g, RngStream& rng,
                                         const SolveOptions& options = {});

}  // namespace wsf
