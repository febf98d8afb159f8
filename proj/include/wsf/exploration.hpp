#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsf/linear_solver.hpp"
#include "wsf/network.hpp"
#include "wsf/rng.hpp"

namespace wsf {

enum class EdgeRule {
  ball_min,     // least radius of a ball B_r holding the edge
  max_current,  // ball_min, except at n = n_r: largest unit current from S_n
};

EdgeRule parse_edge_rule(const std::string& text);
std::string to_string(EdgeRule rule);

struct ExplorationOptions {
  EdgeRule rule = EdgeRule::ball_min;
  int max_steps = 0;             // 0: run to termination
  SolveOptions solve;
};

/// One step E_n -> E_{n+1} = E_n + {e}.
struct ExplorationStep {
  int n = 0;
  EdgeId edge = kNoEdge;         // box edge id
  bool in_forest = false;
  double probability = 0.0;      // P[e in F | F_n]
  double m_before = 0.0;         // M_n
  double m_after = 0.0;          // M_{n+1}
  double m_expected = 0.0;       // E[M_{n+1} | F_n]
  int s_size = 0;                // |S_{n+1}|
  int s_version = 0;             // number of forest edges in E_{n+1}
  int radius = 0;                // least r with e inside B_r
  bool at_n_r = false;           // the least candidate radius just grew
  bool by_current = false;       // chosen by the max-current rule
};

struct ExplorationTrace {
  double m0 = 0.0;
  std::vector<ExplorationStep> steps;
  bool event_a = false;     // every edge at S_n examined
  bool exhausted = false;   // only edges to the wired vertex remain
  bool truncated = false;   // stopped by max_steps
  std::vector<VertexId> final_s;
  int truncation_radius = 0;
};

/// The edge-by-edge exploration of the component of o in WSF_o, run on a
/// wired lattice box. The forest is revealed lazily: each examined edge is
/// included with its conditional Kirchhoff probability given the edges
/// already examined. M_n = EC(S_n, wired; box \ E_n). Edges joining S_n to
/// the wired vertex are never examined: in the box they close a cycle
/// through the identified root, an artefact of truncation.
ExplorationTrace exploration_process(const Network& box, VertexId o, RngStream& rng,
                                     const ExplorationOptions& options = {});

/// Exact bounds around the conditional inclusion probability of edge e
/// given the examined set E (e not in E) with S the current component.
struct EscapeBoundReport {
  double probability = 0.0;
  double lower = 0.0;   // c(e) / pi_{G \ E}(v)
  double upper = 0.0;   // c(e) / (c(e) + alpha)
  double alpha = 0.0;   // EC(v, wired; (G \ E) with S removed)
  bool lower_ok = false;
  bool upper_ok = false;
};

EscapeBoundReport escape_probability_bound_check(const Network& box, std::span<const VertexId> s,
                                                 std::span<const EdgeId> examined, EdgeId e,
                                                 const SolveOptions& options = {});

/// P[e in F | F_n] for an edge at S: c(e) / (c(e) + EC(v, S + wired; G \ E_{n+1})),
/// with v the endpoint of e outside S; 0 when both endpoints are in S.
double conditional_inclusion_probability(const Network& box, std::span<const VertexId> s,
                                         std::span<const EdgeId> examined, EdgeId e,
                                         const SolveOptions& options = {});

}  // namespace wsf
