#pragma once

#include <iosfwd>
#include <string>

#include "wsf/network.hpp"

namespace wsf {

// Text format, one item per line:
//   u v c              edge between vertex tokens u and v with conductance c
//   @coord v x1 ... xd lattice coordinates of v
//   @wired v           designate v as the wired vertex
//   # ...              comment (also allowed after an entry)
// Vertex ids follow first appearance. Conductance defaults to 1 when omitted.

Network read_edge_list(std::istream& in);
Network read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Network& g);

/// Resolves a vertex token (name, or numeric id when the network is unnamed).
VertexId find_vertex(const Network& g, const std::string& token);

}  // namespace wsf
