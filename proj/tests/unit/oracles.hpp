#pragma once
// Brute-force references used only by the tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "blockbetti/blocks.hpp"
#include "blockbetti/graph.hpp"

namespace oracle {

using blockbetti::Graph;

// Smallest adjacency signature over all relabelings.
inline std::vector<std::uint64_t> canonical(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> sig(n, 0);
    for (auto [u, v] : g.edges()) {
      sig[perm[u]] |= 1ULL << perm[v];
      sig[perm[v]] |= 1ULL << perm[u];
    }
    if (best.empty() || sig < best) best = sig;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every labeled graph on n vertices satisfying `keep`, one per isomorphism class.
template <class Keep>
std::vector<Graph> unlabeled_graphs(int n, Keep keep) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<std::vector<std::uint64_t>> seen;
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (1ULL << slots.size()); ++m) {
    Graph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((m >> k) & 1U) g.add_edge(slots[k].first, slots[k].second);
    if (!keep(g)) continue;
    auto c = canonical(g);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    out.push_back(g);
  }
  return out;
}

// Block graph by definition: every pair of vertices in a common 2-connected
// piece is adjacent, i.e. no induced cycle of length >= 4 and no diamond.
inline bool block_graph_by_cycles(const Graph& g) {
  int n = g.order();
  // Diamond: adjacent u, v with two non-adjacent common neighbours.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      blockbetti::Mask common = g.neighbors(u) & g.neighbors(v);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if ((common >> a & 1U) && (common >> b & 1U) && !g.adjacent(a, b)) return false;
    }
  // Chordless cycles of length >= 4, by DFS over induced paths.
  bool found = false;
  std::vector<int> path;
  auto extend = [&](auto&& self, blockbetti::Mask used) -> void {
    if (found) return;
    int last = path.back();
    for (int w = path.front() + 1; w < n; ++w) {
      if ((used >> w) & 1U || !g.adjacent(last, w)) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size(); ++k) chord = chord || g.adjacent(path[k], w);
      if (chord) continue;
      if (path.size() >= 3 && g.adjacent(path.front(), w)) {
        found = true;
        return;
      }
      if (path.size() > 1 && g.adjacent(path.front(), w)) continue;
      path.push_back(w);
      self(self, used | (1ULL << w));
      path.pop_back();
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    path = {s};
    extend(extend, 1ULL << s);
  }
  return !found;
}

}  // namespace oracle
