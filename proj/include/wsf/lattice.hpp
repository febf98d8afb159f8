#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wsf/network.hpp"

namespace wsf {

enum class BoundaryMode {
  free,
  wired,              // exterior identified to one extra vertex
  wired_root_origin,  // additionally the origin is identified with it
};

/// Nearest-neighbor box B_r = {z in Z^d : |z|_inf <= r} with unit conductances.
struct LatticeBoxSpec {
  int dimension = 2;
  int radius = 1;
  BoundaryMode mode = BoundaryMode::wired;
  std::int64_t vertex_limit = 64'000'000;
};

/// Vertices of the box come first in lexicographic order of their
/// coordinates; in wired mode the exterior vertex is the last one. Edges are
/// emitted per vertex in the same order, axis by axis.
Network build_lattice_box(const LatticeBoxSpec& spec);

/// Index of the box vertex with the given coordinates (free/wired layouts).
VertexId lattice_index(int dimension, int radius, std::span<const int> coords);

/// Index of 0 in a free or wired box.
VertexId lattice_origin(int dimension, int radius);

/// Number of box vertices (2r+1)^d; throws ResourceError past `limit`.
std::int64_t lattice_box_size(int dimension, int radius, std::int64_t limit);

int sup_norm(std::span<const int> x);
double euclidean_distance(std::span<const int> x, std::span<const int> y);

/// Radius of the smallest sup-norm ball containing both endpoints of e.
/// Requires both endpoints to carry coordinates.
int edge_ball_radius(const Network& g, EdgeId e);

BoundaryMode parse_boundary_mode(const std::string& text);
std::string to_string(BoundaryMode mode);

}  // namespace wsf
