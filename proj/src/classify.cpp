#include "blockbetti/classify.hpp"

#include <algorithm>

#include "blockbetti/blocks.hpp"
#include "blockbetti/errors.hpp"

namespace blockbetti {

namespace {

Graph from_one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

// Backtracking over pattern vertices in label order; each pattern vertex after
// the first is adjacent to an earlier one, so candidates come from neighborhoods.
struct EmbeddingSearch {
  const Graph& pattern;
  const Graph& g;
  std::vector<int> image;
  Mask used = 0;

  bool extend(int k) {
    if (k == pattern.order()) return true;
    Mask candidates = g.vertices() & ~used;
    for (int j = 0; j < k; ++j)
      if (pattern.adjacent(j, k)) candidates &= g.neighbors(image[j]);
    bool found = false;
    for_each_bit(candidates, [&](int v) {
      if (found || g.degree(v) < pattern.degree(k)) return;
      for (int j = 0; j < k; ++j)
        if (!pattern.adjacent(j, k) && g.adjacent(image[j], v)) return;
      image[k] = v;
      used |= bit(v);
      if (extend(k + 1)) {
        found = true;
        return;
      }
      used &= ~bit(v);
    });
    return found;
  }
};

}  // namespace

const std::vector<ForbiddenGraph>& forbidden_T_graphs() {
  static const std::vector<ForbiddenGraph> graphs = {
      {0, "alpha", from_one_based(7, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {1, 6}, {1, 7}, {6, 7}})},
      {1, "beta", from_one_based(8, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {1, 6}, {6, 7}, {6, 8}})},
      {2, "gamma", from_one_based(9, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 6}, {4, 7}, {5, 8}, {5, 9}})},
      {3, "delta", from_one_based(10, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 9}, {4, 10}})},
  };
  return graphs;
}

std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& g) {
  if (pattern.order() > g.order()) return std::nullopt;
  EmbeddingSearch search{pattern, g, std::vector<int>(pattern.order(), -1)};
  if (search.extend(0)) return search.image;
  return std::nullopt;
}

std::optional<ForbiddenHit> contains_forbidden(const Graph& g) {
  for (const auto& t : forbidden_T_graphs())
    if (auto emb = find_induced_embedding(t.graph, g)) return ForbiddenHit{t.id, *emb};
  return std::nullopt;
}

CutpointCondition satisfies_cutpoint_condition(const Graph& g) {
  CutpointCondition out;
  Subgraph p = restrict_to_P(g);
  if (p.graph.order() == 0) return out;
  for (Mask comp : p.graph.components()) {
    if (popcount(comp) < 3) continue;  // no cutpoints
    Subgraph part = induced_subgraph(p.graph, comp);
    BlockStructure bs = block_structure(part.graph);
    for_each_bit(bs.cutpoints, [&](int v) {
      if (bs.cdeg[v] != 2) {
        out.ok = false;
        out.violations.push_back({p.origin[part.origin[v]], bs.cdeg[v]});
      }
    });
  }
  std::sort(out.violations.begin(), out.violations.end(),
            [](const auto& a, const auto& b) { return a.vertex < b.vertex; });
  return out;
}

ClassificationVerdict classify(const Graph& g) {
  if (g.order() == 0 || !g.connected()) throw PreconditionError("classify: graph must be connected");
  if (!is_block_graph(g)) throw PreconditionError("classify: not a block graph");

  ClassificationVerdict v;
  v.forbidden_hit = contains_forbidden(g);
  v.cutpoint_condition = satisfies_cutpoint_condition(g);
  Decomposition d = decompose(g);
  v.indecomposable = d.s() == 1;
  if (v.indecomposable) {
    if (v.forbidden_hit.has_value() == v.cutpoint_condition.ok)
      throw VerificationFailure("classify: forbidden-subgraph test and cutpoint test disagree on " +
                                to_graph6(g));
    v.predicted_single_extremal = v.cutpoint_condition.ok;
    return v;
  }
  // Distinguished extremal positions add up across a decomposition, so the
  // whole graph has a single extremal entry exactly when every piece does.
  v.predicted_single_extremal = true;
  for (const auto& c : d.components) {
    v.components.push_back(classify(c.graph));
    v.component_labels.push_back(c.origin);
    v.predicted_single_extremal = v.predicted_single_extremal && v.components.back().predicted_single_extremal;
  }
  return v;
}

}  // namespace blockbetti
