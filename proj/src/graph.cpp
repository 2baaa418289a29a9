#include "blockbetti/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "blockbetti/errors.hpp"

namespace blockbetti {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices)
    throw PreconditionError("graph order must lie in 0.." + std::to_string(kMaxVertices));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u + 1));
  if (adjacent(u, v))
    throw PreconditionError("duplicate edge " + std::to_string(std::min(u, v) + 1) + " " +
                            std::to_string(std::max(u, v) + 1));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for_each_bit(adj_[u] & ~(bit(u + 1) - 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

std::vector<Mask> Graph::components(Mask within) const {
  std::vector<Mask> out;
  Mask left = within;
  while (left) {
    Mask comp = bit(lowest(left));
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= adj_[v]; });
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::permuted(const std::vector<int>& perm) const {
  Graph h(n_);
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

namespace {

std::string_view trim(std::string_view s) {
  auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<long> parse_ints(std::string_view s, int line) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == s.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc{}) throw ParseError(line, "expected an integer");
    pos = static_cast<std::size_t>(ptr - s.data());
    if (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])))
      throw ParseError(line, "expected an integer");
    out.push_back(value);
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto nums = parse_ints(line, line_no);
    if (!g) {
      if (nums.size() != 1) throw ParseError(line_no, "first line must hold the vertex count");
      if (nums[0] < 0 || nums[0] > kMaxVertices)
        throw ParseError(line_no, "vertex count out of range");
      g.emplace(static_cast<int>(nums[0]));
    } else {
      if (nums.size() != 2) throw ParseError(line_no, "expected an edge \"u v\"");
      long u = nums[0], v = nums[1];
      if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      if (u < 1 || v < 1 || u > g->order() || v > g->order())
        throw ParseError(line_no, "vertex out of range 1.." + std::to_string(g->order()));
      if (u > v) std::swap(u, v);
      if (g->adjacent(static_cast<int>(u - 1), static_cast<int>(v - 1)))
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      g->add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (end == text.size()) break;
  }
  if (!g) throw ParseError(0, "empty graph document");
  return *g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError(0, "empty graph6 string");
  int n = line[0] - 63;
  if (n < 0 || n > 62) throw ParseError(0, "graph6 order byte out of range");
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (line.size() != 1 + (bits + 5) / 6) throw ParseError(0, "graph6 string has the wrong length");
  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int byte = line[1 + k / 6] - 63;
      if (byte < 0 || byte > 63) throw ParseError(0, "invalid graph6 character");
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw PreconditionError("graph6 writer supports n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.ends_with(".g6")) {
    std::string first;
    std::getline(buf, first);
    return parse_graph6(first);
  }
  return parse_graph(buf.str());
}

Subgraph induced_subgraph(const Graph& g, Mask w) {
  if (w == 0) throw PreconditionError("induced subgraph on an empty vertex set");
  if (!subset_of(w, g.vertices())) throw PreconditionError("vertex set not contained in the graph");
  Subgraph out{Graph(popcount(w)), bits_of(w)};
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t k = 0; k < out.origin.size(); ++k) index[out.origin[k]] = static_cast<int>(k);
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) out.graph.add_edge(index[u], index[v]);
  return out;
}

Subgraph restrict_to_P(const Graph& g) {
  Mask p = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 1) p |= bit(v);
  if (p == 0) return Subgraph{Graph(0), {}};
  return induced_subgraph(g, p);
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (auto [u, v] : g.edges()) mix(static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint64_t>(v));
  return h;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace blockbetti
