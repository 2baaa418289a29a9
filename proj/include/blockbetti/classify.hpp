#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockbetti/graph.hpp"

namespace blockbetti {

/// The four minimal obstructions to a single extremal Betti number among
/// indecomposable block graphs.
struct ForbiddenGraph {
  int id = 0;            // 0..3
  std::string case_tag;  // alpha, beta, gamma, delta
  Graph graph;
  std::string name() const { return "T" + std::to_string(id); }
};

/// T0: three triangles through one vertex (n=7).
/// T1: two triangles through v, plus v-u with two pendant leaves at u (n=8).
/// T2: path l-m-r, m in a triangle, two pendant leaves at each of l and r (n=9).
/// T3: center m joined to l, r, u, each carrying two pendant leaves (n=10).
const std::vector<ForbiddenGraph>& forbidden_T_graphs();

struct ForbiddenHit {
  int id = 0;
  std::vector<int> embedding;  // embedding[k] = vertex of g playing vertex k of T_id
};

/// Induced copy of some T_j; the smallest id wins, then the lexicographically
/// smallest embedding.
std::optional<ForbiddenHit> contains_forbidden(const Graph& g);
std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& g);

struct CutpointViolation {
  int vertex = 0;  // vertex of g
  int cliques = 0;  // maximal cliques of the restriction containing it
};

struct CutpointCondition {
  bool ok = true;
  std::vector<CutpointViolation> violations;
};

/// Every cutpoint of the restriction to non-leaf vertices lies in exactly two
/// of its maximal cliques. Requires a connected block graph.
CutpointCondition satisfies_cutpoint_condition(const Graph& g);

struct ClassificationVerdict {
  bool indecomposable = true;
  std::optional<ForbiddenHit> forbidden_hit;
  CutpointCondition cutpoint_condition;
  bool predicted_single_extremal = false;
  /// Per-component verdicts for decomposable graphs, with their label maps.
  std::vector<ClassificationVerdict> components;
  std::vector<std::vector<int>> component_labels;
};

/// Requires a connected block graph. On indecomposable input the forbidden
/// subgraph test and the cutpoint test must agree; disagreement raises
/// VerificationFailure.
ClassificationVerdict classify(const Graph& g);

}  // namespace blockbetti
