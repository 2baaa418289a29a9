#include "blockbetti/generate.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "blockbetti/blocks.hpp"
#include "blockbetti/errors.hpp"

namespace blockbetti {

namespace {

// Block-cut tree: nodes [0, blocks) are blocks, the rest are cutpoints.
struct BlockCutTree {
  std::vector<std::string> label;
  std::vector<std::vector<int>> adj;
};

BlockCutTree block_cut_tree(const Graph& g) {
  BlockStructure bs = block_structure(g);
  BlockCutTree t;
  std::vector<int> cut_ids = bits_of(bs.cutpoints);
  std::size_t nb = bs.blocks.size();
  t.adj.resize(nb + cut_ids.size());
  for (std::size_t b = 0; b < nb; ++b) {
    t.label.push_back("B" + std::to_string(popcount(bs.blocks[b] & ~bs.cutpoints)));
    for (std::size_t c = 0; c < cut_ids.size(); ++c)
      if ((bs.blocks[b] >> cut_ids[c]) & 1U) {
        t.adj[b].push_back(static_cast<int>(nb + c));
        t.adj[nb + c].push_back(static_cast<int>(b));
      }
  }
  t.label.resize(t.adj.size(), "C");
  return t;
}

std::string encode(const BlockCutTree& t, int node, int parent) {
  std::vector<std::string> kids;
  for (int c : t.adj[node])
    if (c != parent) kids.push_back(encode(t, c, node));
  std::sort(kids.begin(), kids.end());
  std::string s = t.label[node] + "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

std::vector<int> tree_centers(const BlockCutTree& t) {
  std::size_t n = t.adj.size();
  std::vector<int> degree(n), layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(t.adj[v].size());
    if (degree[v] <= 1) layer.push_back(static_cast<int>(v));
  }
  std::size_t removed = layer.size();
  while (removed < n) {
    std::vector<int> next;
    for (int v : layer)
      for (int w : t.adj[v])
        if (--degree[w] == 1) next.push_back(w);
    removed += next.size();
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string block_graph_canonical_form(const Graph& g) {
  BlockCutTree t = block_cut_tree(g);
  std::string best;
  for (int c : tree_centers(t)) {
    std::string s = encode(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::vector<Graph> enumerate_block_graphs(int n) {
  if (n < 1) throw PreconditionError("enumerate_block_graphs: n must be positive");
  std::map<std::string, Graph> level{{block_graph_canonical_form(Graph(1)), Graph(1)}};
  for (int size = 1; size < n; ++size) {
    std::map<std::string, Graph> next;
    auto offer = [&](Graph h) {
      std::string key = block_graph_canonical_form(h);
      next.try_emplace(std::move(key), std::move(h));
    };
    for (const auto& [key, g] : level) {
      auto grow = [&](Mask attach) {
        Graph h(size + 1, g.edges());
        for_each_bit(attach, [&](int v) { h.add_edge(v, size); });
        offer(std::move(h));
      };
      for (Mask c : maximal_cliques(g)) grow(c);
      for (int v = 0; v < size; ++v) grow(bit(v));
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) out.push_back(g);
  return out;
}

Graph random_block_graph(int n_max, int max_clique, bool require_indecomposable, std::uint64_t seed) {
  if (n_max < 2) throw PreconditionError("random_block_graph: n_max must be at least 2");
  if (n_max > kMaxVertices) throw PreconditionError("random_block_graph: n_max too large");
  if (max_clique < 2) throw PreconditionError("random_block_graph: max_clique must be at least 2");

  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  int target = uniform(2, n_max);
  int first = uniform(2, std::min(max_clique, target));
  std::vector<Edge> edges;
  std::vector<int> cdeg(first, 1);
  int n = first;
  auto add_clique = [&](int at, int k) {
    std::vector<int> members{at};
    for (int j = 1; j < k; ++j) {
      members.push_back(n);
      cdeg.push_back(1);
      ++n;
    }
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) edges.emplace_back(members[a], members[b]);
    ++cdeg[at];
  };
  for (int u = 0; u < first; ++u)
    for (int v = u + 1; v < first; ++v) edges.emplace_back(u, v);

  for (int attempts = 0; attempts < 64 && n < target; ++attempts) {
    int room = target - n;
    int at = uniform(0, n - 1);
    int needed = (require_indecomposable && cdeg[at] == 1) ? 2 : 1;
    if (room < needed) continue;
    // Split the room between the new cliques, each receiving at least one new vertex.
    for (int k = 0; k < needed; ++k) {
      int left_for_others = needed - 1 - k;
      int cap = std::min(max_clique - 1, target - n - left_for_others);
      add_clique(at, 1 + uniform(1, cap));
    }
  }
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  for (int v = n - 1; v > 0; --v) std::swap(perm[v], perm[uniform(0, v)]);
  return Graph(n, edges).permuted(perm);
}

}  // namespace blockbetti
