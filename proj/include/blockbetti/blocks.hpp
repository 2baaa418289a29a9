#pragma once

#include <optional>
#include <vector>

#include "blockbetti/graph.hpp"

namespace blockbetti {

/// Biconnected structure and clique bookkeeping of a connected graph.
struct BlockStructure {
  std::vector<Mask> blocks;           // biconnected components, sorted
  Mask cutpoints = 0;
  std::vector<Mask> maximal_cliques;  // sorted
  std::vector<int> cdeg;              // number of maximal cliques containing v
  Mask free_vertices = 0;             // cdeg == 1
  Mask inner_vertices = 0;            // cdeg > 1
  int f() const { return popcount(free_vertices); }
  int i() const { return popcount(inner_vertices); }
};

/// Lexicographic order on sets viewed as increasing vertex sequences.
bool set_less(Mask a, Mask b);

/// Maximal cliques of the subgraph induced on `within` (pivoting Bron-Kerbosch).
std::vector<Mask> maximal_cliques(const Graph& g, Mask within);
inline std::vector<Mask> maximal_cliques(const Graph& g) { return maximal_cliques(g, g.vertices()); }

/// Throws PreconditionError on disconnected input.
BlockStructure block_structure(const Graph& g);

/// Every block is complete. Requires a connected graph.
bool is_block_graph(const Graph& g);

/// Splitting into indecomposable pieces glued at free vertices.
struct Decomposition {
  std::vector<Subgraph> components;  // ordered by sorted original labels
  Mask gluing_vertices = 0;
  int s() const { return static_cast<int>(components.size()); }
};

/// A vertex at which the graph splits as G1 u G2 with the vertex free in both:
/// a cutpoint lying in exactly two maximal cliques.
bool is_splitting_vertex(const Graph& g, const BlockStructure& bs, int v);

/// Splits repeatedly at the lowest-labeled splitting vertex. Requires a connected graph.
Decomposition decompose(const Graph& g);

/// G = G1 u G2 glued at the lowest splitting vertex; nullopt when indecomposable.
struct BinarySplit {
  int vertex = -1;
  Subgraph first;   // side holding the smallest other vertex
  Subgraph second;
};
std::optional<BinarySplit> split_once(const Graph& g);

/// Union of the components, mapped back through their label maps.
Graph reglue(const Decomposition& d, int n);

/// The graphs used in the leaf induction for block graphs.
struct LeafSurgery {
  int cutpoint = -1;
  Graph g_prime;             // cliques through the cutpoint merged into one clique
  Subgraph g_double_prime;   // cutpoint removed
  Subgraph h;                // cutpoint removed from g_prime
  int q = 0;                 // components of g_double_prime, minus one
};

bool is_leaf_block(const BlockStructure& bs, Mask block);
std::vector<Mask> leaf_blocks(const Graph& g);

/// Requires a connected block graph with an inner vertex and `leaf` a leaf block.
LeafSurgery leaf_surgery(const Graph& g, Mask leaf);

}  // namespace blockbetti
