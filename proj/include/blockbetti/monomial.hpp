#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blockbetti/bits.hpp"

namespace blockbetti {

/// Variables of K[x_1..x_n, y_1..y_n]. Index k < n is x_{k+1}, index n+k is
/// y_{k+1}; lex priority follows the index (x_1 > ... > x_n > y_1 > ... > y_n).
struct Variable {
  enum class Kind : std::uint8_t { x, y };
  Kind kind = Kind::x;
  int vertex = 0;  // 0-based

  int index(int n) const { return kind == Kind::x ? vertex : n + vertex; }
  static Variable from_index(int index, int n) {
    return index < n ? Variable{Kind::x, index} : Variable{Kind::y, index - n};
  }
  std::string name() const { return (kind == Kind::x ? "x" : "y") + std::to_string(vertex + 1); }
};

inline constexpr int kMaxVariables = 64;

/// Exponent vector over at most 64 variables.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  Mask support() const {
    Mask m = 0;
    for (int k = 0; k < kMaxVariables; ++k)
      if (e[k]) m |= bit(k);
    return m;
  }
  bool divides(const Monomial& o) const {
    for (int k = 0; k < kMaxVariables; ++k)
      if (e[k] > o.e[k]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int k = 0; k < kMaxVariables; ++k) r.e[k] = static_cast<std::uint8_t>(e[k] + o.e[k]);
    return r;
  }
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int k = 0; k < kMaxVariables; ++k) r.e[k] = static_cast<std::uint8_t>(e[k] - o.e[k]);
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (int k = 0; k < kMaxVariables; ++k) r.e[k] = std::max(e[k], o.e[k]);
    return r;
  }
  bool coprime(const Monomial& o) const { return (support() & o.support()) == 0; }
  bool operator==(const Monomial&) const = default;

  static Monomial variable(int index) {
    Monomial m;
    m.e[index] = 1;
    return m;
  }
  static Monomial from_mask(Mask m) {
    Monomial r;
    for_each_bit(m, [&](int k) { r.e[k] = 1; });
    return r;
  }
};

/// Lexicographic comparison with variable 0 highest: true when a > b.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int k = 0; k < kMaxVariables; ++k)
    if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
  return false;
}

/// Same order on squarefree monomials encoded as variable masks.
inline bool lex_greater(Mask a, Mask b) {
  Mask d = a ^ b;
  return d != 0 && ((a >> lowest(d)) & 1U);
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Product of variables in variable order, e.g. "x1*x3*y2"; "1" for the unit.
std::string format_monomial(const Monomial& m, int n);
std::string format_monomial(Mask m, int n);

/// Squarefree monomial ideal in `nvars` variables, generators as masks.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Mask> gens;

  /// Drop generators divisible by others; order lex-descending.
  void minimalize();
  bool contains(Mask m) const;
  Mask support() const;
  bool operator==(const MonomialIdeal&) const = default;
};

}  // namespace blockbetti
