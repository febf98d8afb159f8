#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wsf {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Undirected edge with positive conductance. `label` survives contraction
/// and deletion so edges of derived networks can be traced to their origin.
struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  double conductance = 1.0;
  std::int64_t label = -1;
};

/// An edge together with a direction. The stored orientation is u -> v.
struct OrientedEdge {
  EdgeId id = kNoEdge;
  bool reversed = false;
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;

  OrientedEdge reversal() const { return {id, !reversed, head, tail}; }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Optional Z^d coordinates. Vertices created by identification have none.
struct Embedding {
  int dimension = 0;
  std::vector<int> coords;     // vertex_count * dimension
  std::vector<char> present;   // vertex_count

  bool empty() const { return dimension == 0; }
};

/// Finite weighted multigraph. Immutable after construction: parallel edges
/// are kept distinct, self-loops are rejected.
class Network {
 public:
  Network() = default;
  Network(VertexId vertex_count, std::vector<Edge> edges,
          std::optional<VertexId> wired = std::nullopt, Embedding embedding = {},
          std::vector<std::string> names = {});

  VertexId vertex_count() const { return vertex_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Incidence> incident(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// pi(v): total conductance of edges incident to v.
  double pi(VertexId v) const { return pi_[v]; }

  /// True when every edge at v has the same conductance.
  bool uniform_at(VertexId v) const { return uniform_[v] != 0; }
  /// Prefix sums of incident conductances, aligned with incident(v).
  std::span<const double> cumulative_conductance(VertexId v) const {
    return {cumulative_.data() + offsets_[v], cumulative_.data() + offsets_[v + 1]};
  }

  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  OrientedEdge oriented(EdgeId e, bool reversed = false) const {
    const Edge& ed = edges_[e];
    return reversed ? OrientedEdge{e, true, ed.v, ed.u} : OrientedEdge{e, false, ed.u, ed.v};
  }
  /// Orientation of e with the given tail.
  OrientedEdge oriented_from(EdgeId e, VertexId tail) const {
    return oriented(e, edges_[e].u != tail);
  }

  std::optional<VertexId> wired_vertex() const { return wired_; }
  bool is_wired(VertexId v) const { return wired_ && *wired_ == v; }

  const Embedding& embedding() const { return embedding_; }
  bool has_coords(VertexId v) const {
    return !embedding_.empty() && embedding_.present[v] != 0;
  }
  std::span<const int> coords(VertexId v) const {
    return {embedding_.coords.data() + static_cast<std::size_t>(v) * embedding_.dimension,
            static_cast<std::size_t>(embedding_.dimension)};
  }

  const std::vector<std::string>& names() const { return names_; }
  std::string vertex_name(VertexId v) const;

  bool is_connected() const;
  /// Some vertex not reachable from `from`, or kNoVertex.
  VertexId first_unreachable(VertexId from) const;

 private:
  VertexId vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> adjacency_;
  std::vector<double> cumulative_;
  std::vector<double> pi_;
  std::vector<char> uniform_;
  std::optional<VertexId> wired_;
  Embedding embedding_;
  std::vector<std::string> names_;
};

/// Membership mask over the vertices of a network.
std::vector<char> vertex_mask(VertexId vertex_count, std::span<const VertexId> set);

struct ContractResult {
  Network network;
  std::vector<VertexId> vertex_map;  // old vertex -> new vertex
};

/// G/K: identifies K to a single vertex and drops the resulting loops.
/// The merged vertex takes the smallest id of K; other vertices keep their
/// relative order. Parallel edges and labels are preserved.
ContractResult contract(const Network& g, std::span<const VertexId> k);

struct DeleteResult {
  Network network;
  std::vector<VertexId> vertex_map;  // old vertex -> new vertex or kNoVertex
};

/// G \ K: removes the vertices and every edge incident to them.
DeleteResult delete_vertices(const Network& g, std::span<const VertexId> k);

/// G \ F: removes the edges, keeps every vertex.
Network delete_edges(const Network& g, std::span<const EdgeId> f);

/// Edges with exactly one endpoint in K.
std::vector<EdgeId> edge_boundary(const Network& g, std::span<const VertexId> k);

enum class PiConvention {
  oriented_tail,     // sum of c(e) over oriented edges with tail in K
  incident_edges,    // sum of c(e) over undirected edges meeting K
};

double pi(const Network& g, std::span<const VertexId> k,
          PiConvention convention = PiConvention::oriented_tail);

/// |F|_c.
double mass(const Network& g, std::span<const EdgeId> f);

}  // namespace wsf
