#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace blockbetti {

/// Subset of a ground set of at most 64 elements.
using Mask = std::uint64_t;

inline constexpr Mask bit(int k) { return Mask{1} << k; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int k) { out.push_back(k); });
  return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= bit(e);
  return m;
}

}  // namespace blockbetti
