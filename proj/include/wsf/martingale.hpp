#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wsf/linear_solver.hpp"
#include "wsf/network.hpp"

namespace wsf {

/// Exact law of WSF_o on a small wired network (the UST of G with o and the
/// wired vertex identified), restricted to its interior edges, together with
/// M = EC(S, wired; G \ E) for every partial configuration on E.
///
/// A partial configuration assigns each interior edge one of unknown /
/// present / absent and is encoded in base 3 (digit i for interior edge i).
class MartingaleOracle {
 public:
  MartingaleOracle(const Network& g, VertexId o, const SolveOptions& options = {});

  /// Interior edges (no endpoint at the wired vertex), as edge ids of g.
  const std::vector<EdgeId>& interior_edges() const { return interior_; }
  int interior_index(EdgeId e) const;

  /// P[present edges in F, absent edges not in F].
  double probability(std::uint32_t key);
  /// EC(S, wired; G \ E) with E the decided edges and S the component of o
  /// in the present ones.
  double conductance(std::uint32_t key);
  /// Vertex mask of S for a key.
  std::vector<char> component(std::uint32_t key) const;

  static int digit(std::uint32_t key, int i);
  std::uint32_t with_digit(std::uint32_t key, int i, int d) const;

 private:
  struct Node {
    bool ready = false;
    double probability = 0.0;
    Network network;  // G-hat conditioned on the key (unset when probability is 0)
  };
  Node& node(std::uint32_t key);

  const Network& g_;
  VertexId o_;
  VertexId wired_;
  SolveOptions options_;
  std::vector<EdgeId> interior_;
  std::vector<std::uint32_t> pow3_;
  std::vector<Node> nodes_;
  std::vector<double> conductance_;
  std::vector<char> conductance_ready_;
};

struct MartingaleRow {
  std::vector<EdgeId> present;  // F restricted to E0
  std::vector<EdgeId> absent;
  double probability = 0.0;     // P[F restricted to E0 is this]
  double m0 = 0.0;
  double expected_m1 = 0.0;     // E[M^1 | F restricted to E0]
  double discrepancy = 0.0;
};

struct MartingaleCheck {
  std::vector<MartingaleRow> rows;  // admissible configurations only
  int skipped = 0;                  // configurations outside the lemma's event
  double max_discrepancy = 0.0;
};

/// Compares E[M^1 | F restricted to E0] with M^0 on every configuration of
/// positive probability where every edge of E1 has an endpoint in S_0.
/// E0 must be a subset of E1, both made of interior edges. Throws
/// ResourceError beyond 12 interior edges.
MartingaleCheck martingale_check_exact(const Network& g, VertexId o, std::span<const EdgeId> e0,
                                       std::span<const EdgeId> e1, const SolveOptions& options = {});

struct MartingaleSweep {
  int graphs = 0;
  int instances = 0;        // (graph, wired, o) triples
  long long pairs = 0;      // (E0, E1) pairs
  long long configurations = 0;
  double max_discrepancy = 0.0;
  std::string worst;        // description of the worst instance
};

/// Every connected simple graph with at most `max_edges` edges, every
/// choice of wired vertex and o, every E0 subset of E1 among the interior
/// edges, unit conductances.
MartingaleSweep martingale_catalog_sweep(int max_edges, const SolveOptions& options = {});

}  // namespace wsf
