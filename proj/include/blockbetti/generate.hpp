#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockbetti/graph.hpp"

namespace blockbetti {

/// Isomorphism-invariant string of a connected block graph, built from its
/// block-cut tree (blocks labeled by their number of non-cut vertices).
std::string block_graph_canonical_form(const Graph& g);

/// All connected block graphs on n vertices, one per isomorphism class,
/// ordered by canonical form.
std::vector<Graph> enumerate_block_graphs(int n);

/// Seeded random connected block graph with at most n_max vertices and
/// cliques of size 2..max_clique. With require_indecomposable no vertex
/// lies in exactly two maximal cliques.
Graph random_block_graph(int n_max, int max_clique, bool require_indecomposable, std::uint64_t seed);

}  // namespace blockbetti
