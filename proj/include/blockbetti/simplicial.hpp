#pragma once

#include <cstdint>
#include <vector>

#include "blockbetti/bits.hpp"

namespace blockbetti {

/// Simplicial complex on at most 64 vertices, given by its facets.
/// The empty complex {} (no faces) and the void-free complex {{}} differ:
/// the latter has facets = {0}.
struct SimplicialComplex {
  int ground = 0;
  std::vector<Mask> facets;

  /// Facets with nested ones removed.
  static SimplicialComplex from_faces(int ground, std::vector<Mask> faces);
  /// All faces (including the empty face when nonempty), grouped by cardinality.
  std::vector<std::vector<Mask>> faces_by_size() const;
};

/// Reduced homology dimensions of a complex given by all of its faces grouped by
/// cardinality (entry s holds the faces with s vertices, entry 0 the empty face).
/// Result entry k + 1 is dim H~_k for k = -1 .. max dimension. p = 0 means rationals.
std::vector<long> reduced_homology(const std::vector<std::vector<Mask>>& faces_by_size, std::uint32_t p);

/// Reduced homology dimensions H~_k, k = -1 .. dim, over F_p (p = 0: rationals).
std::vector<long> homology_ranks(const SimplicialComplex& c, std::uint32_t p);

}  // namespace blockbetti
