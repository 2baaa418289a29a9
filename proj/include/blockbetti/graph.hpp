#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockbetti/bits.hpp"

namespace blockbetti {

/// Undirected edge, stored with first < second. Vertices are 0-based.
using Edge = std::pair<int, int>;

inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on vertices 0..n-1 (printed as 1..n).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  /// Throws PreconditionError on loops, duplicates and out-of-range endpoints.
  void add_edge(int u, int v);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  Mask vertices() const { return n_ == kMaxVertices ? ~Mask{0} : bit(n_) - 1; }

  /// Sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Vertex sets of the connected components of the subgraph induced on `within`,
  /// ordered by smallest vertex.
  std::vector<Mask> components(Mask within) const;
  std::vector<Mask> components() const { return components(vertices()); }
  bool connected() const;

  /// Relabel: vertex v becomes perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Mask> adj_;
};

/// A graph together with the original label of each of its vertices.
struct Subgraph {
  Graph graph;
  std::vector<int> origin;  // origin[v] = vertex of the parent graph
};

/// Edge-list text: first line n, then "u v" lines with 1 <= u < v <= n.
/// Blank lines and '#' comments are ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// Standard graph6 encoding (n <= 62).
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Reads an edge-list or graph6 file; graph6 when the extension is .g6.
Graph read_graph_file(const std::string& path);

/// Induced subgraph on `w`, relabeled 1..|w| in increasing order.
Subgraph induced_subgraph(const Graph& g, Mask w);

/// Induced subgraph on the vertices whose degree is not 1.
Subgraph restrict_to_P(const Graph& g);

/// 64-bit FNV-1a hash of the labeled edge list.
std::uint64_t graph_hash(const Graph& g);

// Named families, labeled 1..n along the obvious traversal.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // center is vertex 1

}  // namespace blockbetti
