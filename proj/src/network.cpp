#include "wsf/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsf {

Network::Network(VertexId vertex_count, std::vector<Edge> edges,
                 std::optional<VertexId> wired, Embedding embedding,
                 std::vector<std::string> names)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      wired_(wired),
      embedding_(std::move(embedding)),
      names_(std::move(names)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  if (wired_ && (*wired_ < 0 || *wired_ >= vertex_count_))
    throw std::invalid_argument("wired vertex out of range");
  if (!embedding_.empty()) {
    const auto n = static_cast<std::size_t>(vertex_count_);
    if (embedding_.coords.size() != n * embedding_.dimension || embedding_.present.size() != n)
      throw std::invalid_argument("embedding size does not match vertex count");
  }
  if (!names_.empty() && names_.size() != static_cast<std::size_t>(vertex_count_))
    throw std::invalid_argument("vertex names do not match vertex count");

  std::vector<int> deg(vertex_count_, 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (!(e.conductance > 0.0) || !std::isfinite(e.conductance))
      throw std::invalid_argument("conductance must be positive and finite");
    if (e.label < 0) e.label = static_cast<std::int64_t>(i);
    ++deg[e.u];
    ++deg[e.v];
  }

  offsets_.assign(vertex_count_ + 1, 0);
  for (VertexId v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[e.u]++] = {e.v, i};
    adjacency_[fill[e.v]++] = {e.u, i};
  }

  cumulative_.resize(adjacency_.size());
  pi_.assign(vertex_count_, 0.0);
  uniform_.assign(vertex_count_, 1);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    double acc = 0.0;
    for (int k = offsets_[v]; k < offsets_[v + 1]; ++k) {
      const double c = edges_[adjacency_[k].edge].conductance;
      if (c != edges_[adjacency_[offsets_[v]].edge].conductance) uniform_[v] = 0;
      acc += c;
      cumulative_[k] = acc;
    }
    pi_[v] = acc;
  }
}

std::string Network::vertex_name(VertexId v) const {
  if (!names_.empty()) return names_[v];
  return std::to_string(v);
}

VertexId Network::first_unreachable(VertexId from) const {
  if (vertex_count_ == 0) return kNoVertex;
  std::vector<char> seen(vertex_count_, 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : incident(x)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
  }
  for (VertexId v = 0; v < vertex_count_; ++v)
    if (!seen[v]) return v;
  return kNoVertex;
}

bool Network::is_connected() const {
  return vertex_count_ == 0 || first_unreachable(0) == kNoVertex;
}

std::vector<char> vertex_mask(VertexId vertex_count, std::span<const VertexId> set) {
  std::vector<char> mask(vertex_count, 0);
  for (VertexId v : set) {
    if (v < 0 || v >= vertex_count) throw std::invalid_argument("vertex out of range");
    mask[v] = 1;
  }
  return mask;
}

namespace {

Embedding remap_embedding(const Network& g, const std::vector<VertexId>& map,
                          VertexId new_count, VertexId merged) {
  Embedding out;
  const Embedding& in = g.embedding();
  if (in.empty()) return out;
  out.dimension = in.dimension;
  out.coords.assign(static_cast<std::size_t>(new_count) * in.dimension, 0);
  out.present.assign(new_count, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexId w = map[v];
    if (w == kNoVertex || w == merged || !g.has_coords(v)) continue;
    std::copy(in.coords.begin() + static_cast<std::ptrdiff_t>(v) * in.dimension,
              in.coords.begin() + static_cast<std::ptrdiff_t>(v + 1) * in.dimension,
              out.coords.begin() + static_cast<std::ptrdiff_t>(w) * in.dimension);
    out.present[w] = 1;
  }
  return out;
}

}  // namespace

ContractResult contract(const Network& g, std::span<const VertexId> k) {
  if (k.empty()) throw std::invalid_argument("contract: empty vertex set");
  const auto in_k = vertex_mask(g.vertex_count(), k);
  const VertexId first = *std::min_element(k.begin(), k.end());

  std::vector<VertexId> map(g.vertex_count(), kNoVertex);
  VertexId next = 0;
  VertexId merged = kNoVertex;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_k[v]) {
      if (v == first) merged = next++;
      map[v] = kNoVertex;
    } else {
      map[v] = next++;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in_k[v]) map[v] = merged;

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const VertexId a = map[e.u];
    const VertexId b = map[e.v];
    if (a == b) continue;
    edges.push_back({a, b, e.conductance, e.label});
  }

  std::optional<VertexId> wired;
  if (g.wired_vertex()) wired = map[*g.wired_vertex()];

  Embedding emb = remap_embedding(g, map, next, k.size() == 1 ? kNoVertex : merged);
  std::vector<std::string> names;
  if (!g.names().empty()) {
    names.resize(next);
    for (VertexId v = g.vertex_count() - 1; v >= 0; --v) names[map[v]] = g.names()[v];
  }
  return {Network(next, std::move(edges), wired, std::move(emb), std::move(names)),
          std::move(map)};
}

DeleteResult delete_vertices(const Network& g, std::span<const VertexId> k) {
  const auto in_k = vertex_mask(g.vertex_count(), k);
  std::vector<VertexId> map(g.vertex_count(), kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in_k[v]) map[v] = next++;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!in_k[e.u] && !in_k[e.v]) edges.push_back({map[e.u], map[e.v], e.conductance, e.label});

  std::optional<VertexId> wired;
  if (g.wired_vertex() && !in_k[*g.wired_vertex()]) wired = map[*g.wired_vertex()];
  Embedding emb = remap_embedding(g, map, next, kNoVertex);
  std::vector<std::string> names;
  if (!g.names().empty()) {
    names.resize(next);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (map[v] != kNoVertex) names[map[v]] = g.names()[v];
  }
  return {Network(next, std::move(edges), wired, std::move(emb), std::move(names)),
          std::move(map)};
}

Network delete_edges(const Network& g, std::span<const EdgeId> f) {
  std::vector<char> drop(g.edge_count(), 0);
  for (EdgeId e : f) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge out of range");
    drop[e] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!drop[e]) edges.push_back(g.edge(e));
  return Network(g.vertex_count(), std::move(edges), g.wired_vertex(), g.embedding(), g.names());
}

std::vector<EdgeId> edge_boundary(const Network& g, std::span<const VertexId> k) {
  const auto in_k = vertex_mask(g.vertex_count(), k);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in_k[g.edge(e).u] != in_k[g.edge(e).v]) out.push_back(e);
  return out;
}

double pi(const Network& g, std::span<const VertexId> k, PiConvention convention) {
  const auto in_k = vertex_mask(g.vertex_count(), k);
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    const int ends = (in_k[e.u] ? 1 : 0) + (in_k[e.v] ? 1 : 0);
    if (convention == PiConvention::oriented_tail)
      total += ends * e.conductance;
    else if (ends > 0)
      total += e.conductance;
  }
  return total;
}

double mass(const Network& g, std::span<const EdgeId> f) {
  double total = 0.0;
  for (EdgeId e : f) total += g.edge(e).conductance;
  return total;
}

}  // namespace wsf
