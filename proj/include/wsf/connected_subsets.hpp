#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "wsf/network.hpp"

namespace wsf {

using VertexMask = std::uint64_t;

/// Calls `visit` once for every nonempty connected vertex set of g made of
/// allowed vertices and containing `required`. Sets grow from their least
/// vertex through neighbors, with vertices already ruled out on a branch
/// never revisited. Requires at most 64 vertices; throws ResourceError when
/// the allowed vertex count exceeds `cap`.
void for_each_connected_subset(const Network& g, VertexMask allowed, VertexMask required,
                               const std::function<void(VertexMask)>& visit, int cap = 24);

VertexMask mask_of(std::span<const VertexId> set);
std::vector<VertexId> members(VertexMask m);
inline bool contains(VertexMask m, VertexId v) { return (m >> v) & 1u; }

/// Neighbor masks of every vertex (parallel edges collapse).
std::vector<VertexMask> neighbor_masks(const Network& g);

}  // namespace wsf
