#include "wsf/connected_subsets.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "wsf/error.hpp"

namespace wsf {

VertexMask mask_of(std::span<const VertexId> set) {
  VertexMask m = 0;
  for (VertexId v : set) {
    if (v < 0 || v >= 64) throw std::invalid_argument("vertex outside mask range");
    m |= VertexMask{1} << v;
  }
  return m;
}

std::vector<VertexId> members(VertexMask m) {
  std::vector<VertexId> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::vector<VertexMask> neighbor_masks(const Network& g) {
  if (g.vertex_count() > 64) throw ResourceError("bitmask search supports at most 64 vertices");
  std::vector<VertexMask> nb(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= VertexMask{1} << e.v;
    nb[e.v] |= VertexMask{1} << e.u;
  }
  return nb;
}

namespace {

struct Grower {
  const std::vector<VertexMask>& nb;
  VertexMask allowed;
  VertexMask required;
  const std::function<void(VertexMask)>& visit;

  void run(VertexMask s, VertexMask frontier, VertexMask excluded) {
    if ((s & required) == required) visit(s);
    while (frontier) {
      const VertexMask w = frontier & -frontier;
      frontier ^= w;
      const VertexMask grown = s | w;
      const VertexMask next =
          (frontier | nb[std::countr_zero(w)]) & allowed & ~grown & ~excluded;
      run(grown, next, excluded);
      excluded |= w;
    }
  }
};

}  // namespace

void for_each_connected_subset(const Network& g, VertexMask allowed, VertexMask required,
                               const std::function<void(VertexMask)>& visit, int cap) {
  const auto nb = neighbor_masks(g);
  if (g.vertex_count() < 64) allowed &= (VertexMask{1} << g.vertex_count()) - 1;
  if (std::popcount(allowed) > cap)
    throw ResourceError("connected subset search over " + std::to_string(std::popcount(allowed)) +
                        " vertices exceeds the cap of " + std::to_string(cap));
  if ((required & allowed) != required) return;
  Grower grower{nb, allowed, required, visit};
  VertexMask lower = 0;
  for (VertexId v : members(allowed)) {
    const VertexMask bit = VertexMask{1} << v;
    // Every set containing a required vertex below v was grown earlier.
    if (required && (required & lower)) break;
    grower.run(bit, nb[v] & allowed & ~lower & ~bit, lower);
    lower |= bit;
  }
}

}  // namespace wsf
