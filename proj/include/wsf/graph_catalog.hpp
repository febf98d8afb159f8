#pragma once

#include <utility>
#include <vector>

#include "wsf/network.hpp"
#include "wsf/rng.hpp"

namespace wsf {

/// Unlabeled simple graph given by one representative labeling.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted

  Network to_network(std::optional<VertexId> wired = std::nullopt) const;
};

/// Connected simple graphs with 2..max_vertices vertices, one per
/// isomorphism class.
std::vector<SimpleGraph> connected_graphs_by_vertices(int max_vertices);

/// Connected simple graphs with 1..max_edges edges, one per isomorphism
/// class.
std::vector<SimpleGraph> connected_graphs_by_edges(int max_edges);

/// Canonical form: lexicographically least sorted edge list over all
/// relabelings. Exponential in the vertex count; meant for n <= 8.
SimpleGraph canonical_form(const SimpleGraph& g);

/// Random connected network on n vertices: a uniform random attachment
/// tree plus each other pair joined with probability `extra`; conductances
/// uniform on [cmin, cmax] (exactly cmin when they agree).
Network random_network(int n, double extra, RngStream& rng, double cmin = 1.0, double cmax = 1.0);

}  // namespace wsf
