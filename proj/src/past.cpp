#include "wsf/past.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <stdexcept>

#include "wsf/lattice.hpp"

namespace wsf {

PastFinder::PastFinder(const Network& wired_box) : g_(&wired_box) {
  if (!wired_box.wired_vertex()) throw std::invalid_argument("past_of needs a wired network");
  for (VertexId v = 0; v < wired_box.vertex_count(); ++v)
    if (wired_box.has_coords(v)) radius_ = std::max(radius_, sup_norm(wired_box.coords(v)));
}

PastSummary PastFinder::past_of(std::span<const EdgeId> parent_edge, VertexId x) {
  const Network& g = *g_;
  const VertexId n = g.vertex_count();
  if (x < 0 || x >= n) throw std::invalid_argument("vertex not in the network");
  const VertexId w = *g.wired_vertex();
  if (x == w) throw std::invalid_argument("past_of: vertex is the wired vertex");
  if (static_cast<VertexId>(parent_edge.size()) != n) throw std::invalid_argument("parent array size mismatch");

  state_.assign(n, 0);
  state_[x] = 1;
  state_[w] = -1;
  PastSummary out;
  out.truncation_radius = radius_;
  for (VertexId v = 0; v < n; ++v) {
    if (state_[v] != 0) continue;
    walk_.clear();
    VertexId y = v;
    while (state_[y] == 0) {
      walk_.push_back(y);
      y = g.other_end(parent_edge[y], y);
    }
    const signed char verdict = state_[y];
    for (VertexId z : walk_) state_[z] = verdict;
  }
  std::vector<int> coords;
  const int d = g.embedding().dimension;
  for (VertexId v = 0; v < n; ++v) {
    if (v == x || state_[v] != 1) continue;
    out.vertices.push_back(v);
    if (!g.has_coords(v)) continue;
    const auto c = g.coords(v);
    coords.insert(coords.end(), c.begin(), c.end());
    if (sup_norm(c) >= radius_) out.reached_boundary = true;
  }
  if (d > 0 && !coords.empty()) {
    out.euclidean_diameter = euclidean_diameter(d, coords);
    out.sup_diameter = sup_diameter(d, coords);
    out.graph_diameter = l1_diameter(d, coords);
  }
  return out;
}

PastSummary past_of(const Network& wired_box, std::span<const EdgeId> parent_edge, VertexId x) {
  PastFinder finder(wired_box);
  return finder.past_of(parent_edge, x);
}

double euclidean_diameter(int dimension, std::span<const int> coords) {
  const std::size_t n = coords.size() / dimension;
  if (n < 2) return 0.0;
  std::vector<char> keep(n, 1);
  std::vector<int> key(dimension - 1);
  for (int axis = 0; axis < dimension; ++axis) {
    std::map<std::vector<int>, std::pair<int, int>> extremes;
    for (std::size_t i = 0; i < n; ++i) {
      const int* p = &coords[i * dimension];
      int k = 0;
      for (int a = 0; a < dimension; ++a)
        if (a != axis) key[k++] = p[a];
      auto [it, fresh] = extremes.try_emplace(key, p[axis], p[axis]);
      if (!fresh) {
        it->second.first = std::min(it->second.first, p[axis]);
        it->second.second = std::max(it->second.second, p[axis]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const int* p = &coords[i * dimension];
      int k = 0;
      for (int a = 0; a < dimension; ++a)
        if (a != axis) key[k++] = p[a];
      const auto& mm = extremes.at(key);
      if (p[axis] != mm.first && p[axis] != mm.second) keep[i] = 0;
    }
  }
  std::vector<const int*> hull;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) hull.push_back(&coords[i * dimension]);
  long long best = 0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      long long s = 0;
      for (int a = 0; a < dimension; ++a) {
        const long long diff = hull[i][a] - hull[j][a];
        s += diff * diff;
      }
      best = std::max(best, s);
    }
  return std::sqrt(static_cast<double>(best));
}

int l1_diameter(int dimension, std::span<const int> coords) {
  const std::size_t n = coords.size() / dimension;
  if (n < 2) return 0;
  int best = 0;
  for (int signs = 0; signs < (1 << (dimension - 1)); ++signs) {
    int lo = INT_MAX, hi = INT_MIN;
    for (std::size_t i = 0; i < n; ++i) {
      int s = coords[i * dimension];
      for (int a = 1; a < dimension; ++a) s += ((signs >> (a - 1)) & 1) ? -coords[i * dimension + a] : coords[i * dimension + a];
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    best = std::max(best, hi - lo);
  }
  return best;
}

int sup_diameter(int dimension, std::span<const int> coords) {
  const std::size_t n = coords.size() / dimension;
  if (n < 2) return 0;
  int best = 0;
  for (int a = 0; a < dimension; ++a) {
    int lo = INT_MAX, hi = INT_MIN;
    for (std::size_t i = 0; i < n; ++i) {
      lo = std::min(lo, coords[i * dimension + a]);
      hi = std::max(hi, coords[i * dimension + a]);
    }
    best = std::max(best, hi - lo);
  }
  return best;
}

}  // namespace wsf
