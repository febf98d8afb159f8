#include "wsf/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "wsf/error.hpp"

namespace wsf {

std::int64_t lattice_box_size(int dimension, int radius, std::int64_t limit) {
  if (dimension < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  if (radius < 1) throw std::invalid_argument("lattice radius must be >= 1");
  const std::int64_t side = 2 * static_cast<std::int64_t>(radius) + 1;
  std::int64_t n = 1;
  for (int i = 0; i < dimension; ++i) {
    if (n > limit / side) throw ResourceError("lattice box exceeds the vertex limit");
    n *= side;
  }
  if (n + 1 > limit) throw ResourceError("lattice box exceeds the vertex limit");
  return n;
}

VertexId lattice_index(int dimension, int radius, std::span<const int> coords) {
  const int side = 2 * radius + 1;
  std::int64_t idx = 0;
  for (int i = 0; i < dimension; ++i) {
    if (std::abs(coords[i]) > radius) throw std::invalid_argument("coordinates outside box");
    idx = idx * side + (coords[i] + radius);
  }
  return static_cast<VertexId>(idx);
}

VertexId lattice_origin(int dimension, int radius) {
  std::vector<int> zero(dimension, 0);
  return lattice_index(dimension, radius, zero);
}

Network build_lattice_box(const LatticeBoxSpec& spec) {
  const int d = spec.dimension;
  const int r = spec.radius;
  const std::int64_t count = lattice_box_size(d, r, spec.vertex_limit);
  const bool wired = spec.mode != BoundaryMode::free;
  const auto n = static_cast<VertexId>(count);
  const VertexId total = wired ? n + 1 : n;
  const VertexId exterior = wired ? n : kNoVertex;

  Embedding emb;
  emb.dimension = d;
  emb.coords.resize(static_cast<std::size_t>(total) * d);
  emb.present.assign(total, 1);
  if (wired) emb.present[exterior] = 0;

  std::vector<std::int64_t> stride(d, 1);
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * (2 * r + 1);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(count) * d + (wired ? 2 * d : 0));
  std::vector<int> x(d, -r);
  for (VertexId v = 0; v < n; ++v) {
    std::copy(x.begin(), x.end(), emb.coords.begin() + static_cast<std::ptrdiff_t>(v) * d);
    for (int i = 0; i < d; ++i) {
      if (wired && x[i] == -r) edges.push_back({v, exterior, 1.0, -1});
      if (x[i] < r)
        edges.push_back({v, static_cast<VertexId>(v + stride[i]), 1.0, -1});
      else if (wired)
        edges.push_back({v, exterior, 1.0, -1});
    }
    for (int i = d - 1; i >= 0; --i) {
      if (++x[i] <= r) break;
      x[i] = -r;
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].label = static_cast<std::int64_t>(i);

  std::optional<VertexId> wired_id;
  if (wired) wired_id = exterior;
  Network box(total, std::move(edges), wired_id, std::move(emb));
  if (spec.mode != BoundaryMode::wired_root_origin) return box;

  const VertexId merged[] = {lattice_origin(d, r), exterior};
  return contract(box, merged).network;
}

int sup_norm(std::span<const int> x) {
  int m = 0;
  for (int c : x) m = std::max(m, std::abs(c));
  return m;
}

double euclidean_distance(std::span<const int> x, std::span<const int> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double diff = x[i] - y[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

int edge_ball_radius(const Network& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return std::max(sup_norm(g.coords(ed.u)), sup_norm(g.coords(ed.v)));
}

BoundaryMode parse_boundary_mode(const std::string& text) {
  if (text == "free") return BoundaryMode::free;
  if (text == "wired") return BoundaryMode::wired;
  if (text == "wired-root-origin" || text == "wired-root-o" || text == "wired-with-root-o" || text == "root-wired")
    return BoundaryMode::wired_root_origin;
  throw std::invalid_argument("unknown boundary mode: " + text);
}

std::string to_string(BoundaryMode mode) {
  switch (mode) {
    case BoundaryMode::free: return "free";
    case BoundaryMode::wired: return "wired";
    case BoundaryMode::wired_root_origin: return "wired-root-o";
  }
  return "?";
}

}  // namespace wsf
