#include "blockbetti/simplicial.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "blockbetti/linalg.hpp"

namespace blockbetti {

SimplicialComplex SimplicialComplex::from_faces(int ground, std::vector<Mask> faces) {
  std::sort(faces.begin(), faces.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c{ground, {}};
  for (Mask f : faces)
    if (std::none_of(c.facets.begin(), c.facets.end(), [&](Mask g) { return subset_of(f, g); }))
      c.facets.push_back(f);
  return c;
}

std::vector<std::vector<Mask>> SimplicialComplex::faces_by_size() const {
  std::unordered_set<Mask> seen;
  std::vector<Mask> stack;
  for (Mask f : facets)
    if (seen.insert(f).second) stack.push_back(f);
  while (!stack.empty()) {
    Mask f = stack.back();
    stack.pop_back();
    for_each_bit(f, [&](int v) {
      Mask g = f & ~bit(v);
      if (seen.insert(g).second) stack.push_back(g);
    });
  }
  int top = 0;
  for (Mask f : seen) top = std::max(top, popcount(f));
  std::vector<std::vector<Mask>> out(seen.empty() ? 0 : static_cast<std::size_t>(top) + 1);
  for (Mask f : seen) out[popcount(f)].push_back(f);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<long> reduced_homology(const std::vector<std::vector<Mask>>& faces, std::uint32_t p) {
  if (faces.empty()) return {};
  std::size_t levels = faces.size();
  // rank[s] = rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> rank(levels + 1, 0);
  Mask ground = 0;
  for (const auto& level : faces)
    for (Mask f : level) ground |= f;
  // Small ground sets index faces through a dense table.
  bool dense = ground < (Mask{1} << 22);
  std::vector<std::uint32_t> table(dense ? static_cast<std::size_t>(ground) + 1 : 0);
  for (std::size_t s = 1; s < levels; ++s) {
    if (faces[s].empty() || faces[s - 1].empty()) continue;
    std::unordered_map<Mask, std::uint32_t> index;
    for (std::size_t k = 0; k < faces[s - 1].size(); ++k) {
      if (dense) table[faces[s - 1][k]] = static_cast<std::uint32_t>(k);
      else index.emplace(faces[s - 1][k], static_cast<std::uint32_t>(k));
    }
    SparseMatrix d(faces[s].size(), faces[s - 1].size());
    for (std::size_t r = 0; r < faces[s].size(); ++r) {
      Mask f = faces[s][r];
      int pos = 0;
      for_each_bit(f, [&](int v) {
        Mask g = f & ~bit(v);
        d.add(r, dense ? table[g] : index.at(g), (pos++ % 2) ? -1 : 1);
      });
    }
    d.finalize();
    rank[s] = rank_over(d, p);
  }
  std::vector<long> h(levels, 0);
  for (std::size_t s = 0; s < levels; ++s)
    h[s] = static_cast<long>(faces[s].size()) - static_cast<long>(rank[s]) - static_cast<long>(rank[s + 1]);
  return h;
}

std::vector<long> homology_ranks(const SimplicialComplex& c, std::uint32_t p) {
  return reduced_homology(c.faces_by_size(), p);
}

}  // namespace blockbetti
