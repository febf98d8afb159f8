#include "wsf/edge_list_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace wsf {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

[[noreturn]] void parse_error(int line_no, const std::string& msg) {
  throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Network read_edge_list(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](const std::string& tok) {
    auto [it, inserted] = ids.emplace(tok, static_cast<VertexId>(names.size()));
    if (inserted) names.push_back(tok);
    return it->second;
  };

  std::vector<Edge> edges;
  std::vector<std::pair<VertexId, std::vector<int>>> coords;
  std::string wired_token;
  int dimension = 0;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(strip_comment(line));
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "@coord") {
      if (tok.size() < 3) parse_error(line_no, "@coord needs a vertex and coordinates");
      std::vector<int> x;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        try {
          x.push_back(std::stoi(tok[i]));
        } catch (const std::exception&) {
          parse_error(line_no, "bad coordinate '" + tok[i] + "'");
        }
      }
      if (dimension == 0) dimension = static_cast<int>(x.size());
      if (static_cast<int>(x.size()) != dimension) parse_error(line_no, "inconsistent dimension");
      coords.emplace_back(intern(tok[1]), std::move(x));
    } else if (tok[0] == "@wired") {
      if (tok.size() != 2) parse_error(line_no, "@wired needs exactly one vertex");
      wired_token = tok[1];
      intern(tok[1]);
    } else {
      if (tok.size() < 2 || tok.size() > 3) parse_error(line_no, "expected 'u v c'");
      double c = 1.0;
      if (tok.size() == 3) {
        std::size_t used = 0;
        try {
          c = std::stod(tok[2], &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok[2].size()) parse_error(line_no, "bad conductance '" + tok[2] + "'");
      }
      if (tok[0] == tok[1]) parse_error(line_no, "self-loop");
      if (!(c > 0.0)) parse_error(line_no, "conductance must be positive");
      const VertexId u = intern(tok[0]);
      const VertexId v = intern(tok[1]);
      edges.push_back({u, v, c, -1});
    }
  }

  const auto n = static_cast<VertexId>(names.size());
  Embedding emb;
  if (dimension > 0) {
    emb.dimension = dimension;
    emb.coords.assign(static_cast<std::size_t>(n) * dimension, 0);
    emb.present.assign(n, 0);
    for (const auto& [v, x] : coords) {
      std::copy(x.begin(), x.end(), emb.coords.begin() + static_cast<std::ptrdiff_t>(v) * dimension);
      emb.present[v] = 1;
    }
  }
  std::optional<VertexId> wired;
  if (!wired_token.empty()) wired = ids.at(wired_token);
  return Network(n, std::move(edges), wired, std::move(emb), std::move(names));
}

Network read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Network& g) {
  out << std::setprecision(17);
  for (const Edge& e : g.edges())
    out << g.vertex_name(e.u) << ' ' << g.vertex_name(e.v) << ' ' << e.conductance << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.has_coords(v)) continue;
    out << "@coord " << g.vertex_name(v);
    for (int c : g.coords(v)) out << ' ' << c;
    out << '\n';
  }
  if (g.wired_vertex()) out << "@wired " << g.vertex_name(*g.wired_vertex()) << '\n';
}

VertexId find_vertex(const Network& g, const std::string& token) {
  if (!g.names().empty()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.names()[v] == token) return v;
    throw std::invalid_argument("unknown vertex: " + token);
  }
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("unknown vertex: " + token);
  return v;
}

}  // namespace wsf
