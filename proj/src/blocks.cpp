#include "blockbetti/blocks.hpp"

#include <algorithm>
#include <functional>

#include "blockbetti/errors.hpp"

namespace blockbetti {

bool set_less(Mask a, Mask b) {
  while (a && b) {
    int x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;
}

namespace {

void sort_sets(std::vector<Mask>& sets) { std::sort(sets.begin(), sets.end(), set_less); }

void bron_kerbosch(const Graph& g, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = lowest(px);
  int best = -1;
  for_each_bit(px, [&](int u) {
    int c = popcount(p & g.neighbors(u));
    if (c > best) best = c, pivot = u;
  });
  for_each_bit(p & ~g.neighbors(pivot), [&](int v) {
    Mask nv = g.neighbors(v);
    bron_kerbosch(g, r | bit(v), p & nv, x & nv, out);
    p &= ~bit(v);
    x |= bit(v);
  });
}

// Tarjan's biconnected components on the edge stack.
struct BiconnectedSearch {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<Mask> blocks;
  Mask cutpoints = 0;
  int time = 0;

  explicit BiconnectedSearch(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void visit(int u, int parent) {
    disc[u] = low[u] = time++;
    int children = 0;
    for_each_bit(g.neighbors(u), [&](int v) {
      if (disc[v] < 0) {
        ++children;
        stack.emplace_back(u, v);
        visit(v, u);
        low[u] = std::min(low[u], low[v]);
        if ((parent < 0 && children > 1) || (parent >= 0 && low[v] >= disc[u])) cutpoints |= bit(u);
        if (low[v] >= disc[u]) {
          Mask block = 0;
          for (;;) {
            Edge e = stack.back();
            stack.pop_back();
            block |= bit(e.first) | bit(e.second);
            if (e == Edge{u, v}) break;
          }
          blocks.push_back(block);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    });
  }
};

void require_connected(const Graph& g, const char* op) {
  if (g.order() == 0) throw PreconditionError(std::string(op) + ": empty graph");
  if (!g.connected()) throw PreconditionError(std::string(op) + ": graph is disconnected");
}

}  // namespace

std::vector<Mask> maximal_cliques(const Graph& g, Mask within) {
  std::vector<Mask> out;
  if (within) bron_kerbosch(g, 0, within, 0, out);
  sort_sets(out);
  return out;
}

BlockStructure block_structure(const Graph& g) {
  require_connected(g, "block_structure");
  BlockStructure bs;
  if (g.order() == 1) {
    bs.blocks = {bit(0)};
  } else {
    BiconnectedSearch search(g);
    search.visit(0, -1);
    bs.blocks = std::move(search.blocks);
    bs.cutpoints = search.cutpoints;
  }
  sort_sets(bs.blocks);
  bs.maximal_cliques = maximal_cliques(g);
  bs.cdeg.assign(g.order(), 0);
  for (Mask c : bs.maximal_cliques) for_each_bit(c, [&](int v) { ++bs.cdeg[v]; });
  for (int v = 0; v < g.order(); ++v) (bs.cdeg[v] == 1 ? bs.free_vertices : bs.inner_vertices) |= bit(v);
  return bs;
}

bool is_block_graph(const Graph& g) {
  require_connected(g, "is_block_graph");
  for (Mask b : block_structure(g).blocks) {
    bool complete = true;
    for_each_bit(b, [&](int v) { complete = complete && subset_of(b & ~bit(v), g.neighbors(v)); });
    if (!complete) return false;
  }
  return true;
}

bool is_splitting_vertex(const Graph&, const BlockStructure& bs, int v) {
  return bs.cdeg[v] == 2 && ((bs.cutpoints >> v) & 1U);
}

Decomposition decompose(const Graph& g) {
  require_connected(g, "decompose");
  Decomposition d;
  std::vector<Mask> done;
  std::function<void(Mask)> split = [&](Mask part) {
    Subgraph sub = induced_subgraph(g, part);
    if (sub.graph.order() > 1) {
      BlockStructure bs = block_structure(sub.graph);
      for (int v = 0; v < sub.graph.order(); ++v) {
        if (!is_splitting_vertex(sub.graph, bs, v)) continue;
        auto sides = sub.graph.components(sub.graph.vertices() & ~bit(v));
        int glue = sub.origin[v];
        d.gluing_vertices |= bit(glue);
        for (Mask side : sides) {
          Mask original = bit(glue);
          for_each_bit(side, [&](int w) { original |= bit(sub.origin[w]); });
          split(original);
        }
        return;
      }
    }
    done.push_back(part);
  };
  split(g.vertices());
  sort_sets(done);
  for (Mask part : done) d.components.push_back(induced_subgraph(g, part));
  return d;
}

std::optional<BinarySplit> split_once(const Graph& g) {
  require_connected(g, "split_once");
  if (g.order() < 3) return std::nullopt;
  BlockStructure bs = block_structure(g);
  for (int v = 0; v < g.order(); ++v) {
    if (!is_splitting_vertex(g, bs, v)) continue;
    auto sides = g.components(g.vertices() & ~bit(v));
    if (sides.size() != 2) throw VerificationFailure("split_once: splitting vertex with more than two sides");
    std::sort(sides.begin(), sides.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
    return BinarySplit{v, induced_subgraph(g, sides[0] | bit(v)), induced_subgraph(g, sides[1] | bit(v))};
  }
  return std::nullopt;
}

Graph reglue(const Decomposition& d, int n) {
  Graph g(n);
  for (const auto& c : d.components)
    for (auto [u, v] : c.graph.edges()) {
      int a = c.origin[u], b = c.origin[v];
      if (!g.adjacent(a, b)) g.add_edge(a, b);
    }
  return g;
}

bool is_leaf_block(const BlockStructure& bs, Mask block) {
  if (std::find(bs.blocks.begin(), bs.blocks.end(), block) == bs.blocks.end()) return false;
  return popcount(block & bs.inner_vertices) == 1;
}

std::vector<Mask> leaf_blocks(const Graph& g) {
  BlockStructure bs = block_structure(g);
  std::vector<Mask> out;
  for (Mask b : bs.blocks)
    if (is_leaf_block(bs, b)) out.push_back(b);
  return out;
}

LeafSurgery leaf_surgery(const Graph& g, Mask leaf) {
  if (!is_block_graph(g)) throw PreconditionError("leaf_surgery: not a block graph");
  BlockStructure bs = block_structure(g);
  if (bs.i() == 0) throw PreconditionError("leaf_surgery: graph has no inner vertex");
  if (!is_leaf_block(bs, leaf)) throw PreconditionError("leaf_surgery: block is not a leaf");

  LeafSurgery out;
  out.cutpoint = lowest(leaf & bs.inner_vertices);
  Mask merged = 0;
  for (Mask c : bs.maximal_cliques)
    if ((c >> out.cutpoint) & 1U) merged |= c;

  out.g_prime = g;
  for_each_bit(merged, [&](int u) {
    for_each_bit(merged & ~(bit(u + 1) - 1), [&](int v) {
      if (!out.g_prime.adjacent(u, v)) out.g_prime.add_edge(u, v);
    });
  });
  Mask rest = g.vertices() & ~bit(out.cutpoint);
  out.g_double_prime = induced_subgraph(g, rest);
  out.h = induced_subgraph(out.g_prime, rest);
  out.q = static_cast<int>(out.g_double_prime.graph.components().size()) - 1;
  return out;
}

}  // namespace blockbetti
