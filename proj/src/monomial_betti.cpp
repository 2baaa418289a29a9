#include "blockbetti/monomial_betti.hpp"

#include <algorithm>
#include <bit>

#include <boost/dynamic_bitset.hpp>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "blockbetti/errors.hpp"
#include "blockbetti/linalg.hpp"
#include "blockbetti/parallel.hpp"
#include "blockbetti/simplicial.hpp"

namespace blockbetti {

namespace {

void check_field(std::uint32_t p) {
  if (p != 0 && !is_prime(p)) throw PreconditionError("characteristic must be 0 or a prime");
}

void check_generators(const MonomialIdeal& I, const MonomialBudget& budget) {
  if (popcount(I.support()) > budget.max_variables)
    throw ResourceError("monomial engine: " + std::to_string(popcount(I.support())) +
                        " variables occur, budget is " + std::to_string(budget.max_variables));
  if (I.gens.size() > budget.max_generators)
    throw ResourceError("monomial engine: " + std::to_string(I.gens.size()) + " generators exceed the budget of " +
                        std::to_string(budget.max_generators));
  for (Mask g : I.gens)
    if (g == 0) throw PreconditionError("monomial engine: the unit ideal has no resolution of interest");
}

// Incidence rows as bitsets over the other side; Mask when it fits in 64 bits.
template <class Bits>
struct BitOps;

template <>
struct BitOps<Mask> {
  static Mask make(std::size_t) { return 0; }
  static void set(Mask& b, std::size_t k) { b |= bit(static_cast<int>(k)); }
  static bool test(const Mask& b, std::size_t k) { return (b >> k) & 1U; }
  static bool subset(const Mask& a, const Mask& b) { return subset_of(a, b); }
};

template <>
struct BitOps<boost::dynamic_bitset<>> {
  static boost::dynamic_bitset<> make(std::size_t n) { return boost::dynamic_bitset<>(n); }
  static void set(boost::dynamic_bitset<>& b, std::size_t k) { b.set(k); }
  static bool test(const boost::dynamic_bitset<>& b, std::size_t k) { return b.test(k); }
  static bool subset(const boost::dynamic_bitset<>& a, const boost::dynamic_bitset<>& b) { return a.is_subset_of(b); }
};

// Drop rows contained in another row (equal rows: keep the first).
template <class Bits>
bool drop_dominated(std::vector<Bits>& rows) {
  std::vector<char> dead(rows.size(), 0);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size() && !dead[a]; ++b)
      if (a != b && !dead[b] && BitOps<Bits>::subset(rows[a], rows[b]) && (rows[a] != rows[b] || b < a)) dead[a] = 1;
  std::size_t kept = 0;
  for (std::size_t a = 0; a < rows.size(); ++a)
    if (!dead[a]) rows[kept++] = std::move(rows[a]);
  bool changed = kept != rows.size();
  rows.resize(kept);
  return changed;
}

template <class Bits>
std::vector<Bits> transpose(const std::vector<Bits>& rows, std::size_t cols) {
  std::vector<Bits> t(cols, BitOps<Bits>::make(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (BitOps<Bits>::test(rows[r], c)) BitOps<Bits>::set(t[c], r);
  return t;
}

// Strong collapses on the incidence, then the facets (as vertex masks) of the
// crosscut complex on the smaller side. Empty result: contractible.
template <class Bits>
std::vector<Mask> reduced_facets(const std::vector<Mask>& atoms, const std::vector<Mask>& coatoms, int min_dim) {
  auto too_small = [&](std::size_t r, std::size_t c) {
    return static_cast<long>(std::min(r, c)) < static_cast<long>(min_dim) + 1;
  };
  std::vector<Bits> rows(atoms.size(), BitOps<Bits>::make(coatoms.size()));
  for (std::size_t a = 0; a < atoms.size(); ++a)
    for (std::size_t c = 0; c < coatoms.size(); ++c)
      if (subset_of(atoms[a], coatoms[c])) BitOps<Bits>::set(rows[a], c);
  std::size_t cols = coatoms.size();
  for (bool changed = true; changed;) {
    changed = drop_dominated(rows);
    std::vector<Bits> t = transpose(rows, cols);
    changed = drop_dominated(t) || changed;
    std::size_t live_rows = rows.size();
    cols = t.size();
    rows = transpose(t, live_rows);
  }
  if (rows.size() <= 1 || cols <= 1) return {};  // a simplex or a cone
  if (too_small(rows.size(), cols)) return {};   // H~_d needs d + 1 vertices on either side
  std::vector<Bits> side = rows.size() <= cols ? transpose(rows, cols) : rows;
  std::size_t vertices = std::min(rows.size(), cols);
  if (vertices > 63)
    throw ResourceError("monomial engine: reduced interval still has " + std::to_string(vertices) + " vertices");
  std::vector<Mask> facets;
  for (const auto& f : side) {
    Mask m = 0;
    for (std::size_t v = 0; v < vertices; ++v)
      if (BitOps<Bits>::test(f, v)) m |= bit(static_cast<int>(v));
    facets.push_back(m);
  }
  return facets;
}

}  // namespace

// The crosscut complex on the coatoms has the generators' coatom sets as
// facets; the one on the atoms has the coatoms' generator sets as facets. Both
// compute the open interval (0, sigma), so dominated rows and columns of the
// incidence can be deleted (strong collapses) before building either one.
std::vector<long> interval_homology(const std::vector<Mask>& atoms, const std::vector<Mask>& coatoms,
                                    std::uint32_t p, int min_dim) {
  if (coatoms.empty()) return {1};  // sigma is an atom: the interval is empty
  if (static_cast<long>(std::min(atoms.size(), coatoms.size())) < static_cast<long>(min_dim) + 1) return {};
  std::vector<Mask> facets = atoms.size() <= 64 && coatoms.size() <= 64
                                 ? reduced_facets<Mask>(atoms, coatoms, min_dim)
                                 : reduced_facets<boost::dynamic_bitset<>>(atoms, coatoms, min_dim);
  if (facets.empty()) return {};
  Mask ground = 0;
  for (Mask f : facets) ground |= f;
  std::size_t vertices = static_cast<std::size_t>(std::bit_width(ground));

  // Faces are vertex sets lying in a common facet.
  std::vector<std::vector<Mask>> faces(vertices + 1);
  if (facets.size() <= 64) {
    std::vector<Mask> containing(vertices, 0);
    for (std::size_t f = 0; f < facets.size(); ++f)
      for_each_bit(facets[f], [&](int v) { containing[v] |= bit(static_cast<int>(f)); });
    auto grow = [&](auto&& self, std::size_t start, Mask face, Mask live) -> void {
      faces[popcount(face)].push_back(face);
      for (std::size_t v = start; v < vertices; ++v)
        if (Mask next = live & containing[v]) self(self, v + 1, face | bit(static_cast<int>(v)), next);
    };
    grow(grow, 0, 0, facets.size() == 64 ? ~Mask{0} : bit(static_cast<int>(facets.size())) - 1);
  } else {
    // Many facets: grow faces and dedupe.
    std::unordered_set<Mask> seen{0};
    std::vector<Mask> stack;
    for (Mask f : facets)
      if (seen.insert(f).second) stack.push_back(f);
    while (!stack.empty()) {
      Mask f = stack.back();
      stack.pop_back();
      for_each_bit(f, [&](int v) {
        if (seen.insert(f & ~bit(v)).second) stack.push_back(f & ~bit(v));
      });
    }
    for (Mask f : seen) faces[popcount(f)].push_back(f);
  }
  while (faces.size() > 1 && faces.back().empty()) faces.pop_back();
  return reduced_homology(faces, p);
}


BettiTable MultigradedBetti::coarse() const {
  BettiTable t;
  t.characteristic = characteristic;
  for (const auto& [key, beta] : entries) t.add(key.first, popcount(key.second), beta);
  return t;
}

LcmLattice lcm_lattice(const MonomialIdeal& I, const MonomialBudget& budget) {
  check_generators(I, budget);
  std::unordered_set<Mask> seen(I.gens.begin(), I.gens.end());
  std::vector<Mask> frontier(seen.begin(), seen.end());
  std::sort(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask x : frontier)
      for (Mask g : I.gens) {
        Mask y = x | g;
        if (seen.insert(y).second) {
          next.push_back(y);
          if (seen.size() + 1 > budget.max_lattice)
            throw ResourceError("lcm lattice exceeds " + std::to_string(budget.max_lattice) + " elements");
        }
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  LcmLattice L;
  L.elements.assign(seen.begin(), seen.end());
  L.elements.push_back(0);
  std::sort(L.elements.begin(), L.elements.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return L;
}

MultigradedBetti multigraded_betti_monomial(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget,
                                            int from_column) {
  check_field(p);
  LcmLattice L = lcm_lattice(I, budget);
  MultigradedBetti out;
  out.characteristic = p;
  if (from_column <= 0) out.entries[{0, 0}] = 1;

  std::mutex guard;
  parallel_for(L.elements.size() - 1, budget.threads, [&](std::size_t idx) {
    Mask sigma = L.elements[idx + 1];
    if (popcount(sigma) < from_column) return;  // beta_{i,sigma} = 0 for i > |sigma|
    std::vector<Mask> below;
    for (Mask g : I.gens)
      if (subset_of(g, sigma)) below.push_back(g);

    // Coatoms of [0, sigma]: every element strictly below sigma misses some
    // variable v of sigma, and the largest such element is the lcm of the
    // generators avoiding v.
    std::vector<Mask> candidates;
    for_each_bit(sigma, [&](int v) {
      Mask m = 0;
      for (Mask g : below)
        if (!((g >> v) & 1U)) m |= g;
      if (m) candidates.push_back(m);
    });
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Mask> coatoms;
    for (Mask c : candidates)
      if (std::none_of(candidates.begin(), candidates.end(), [&](Mask d) { return d != c && subset_of(c, d); }))
        coatoms.push_back(c);

    std::vector<long> h = interval_homology(below, coatoms, p, from_column - 2);
    std::lock_guard lock(guard);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] && static_cast<int>(k) + 1 >= from_column) out.entries[{static_cast<int>(k) + 1, sigma}] += h[k];  // H~_{i-2} -> beta_i
  });
  return out;
}

BettiTable betti_monomial(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget) {
  return multigraded_betti_monomial(I, p, budget).coarse();
}

BettiTable betti_monomial_columns(const MonomialIdeal& I, std::uint32_t p, int from_column,
                                  const MonomialBudget& budget) {
  BettiTable t = multigraded_betti_monomial(I, p, budget, from_column).coarse();
  if (from_column > 0) {
    t.total = false;
    for (int i = from_column; i <= I.nvars; ++i)
      for (int j = i; j <= I.nvars; ++j) t.computed.insert({i, j});
  }
  return t;
}

MultigradedBetti multigraded_hochster_betti(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget) {
  check_field(p);
  Mask vars = I.support();
  if (popcount(vars) > budget.hochster_max_variables)
    throw ResourceError("hochster_betti: " + std::to_string(popcount(vars)) + " variables exceed the budget of " +
                        std::to_string(budget.hochster_max_variables));
  MultigradedBetti out;
  out.characteristic = p;
  // Enumerate every subset W of the occurring variables.
  Mask w = 0;
  do {
    std::vector<Mask> inside;
    Mask covered = 0;
    for (Mask g : I.gens)
      if (subset_of(g, w)) inside.push_back(g), covered |= g;
    // A variable of W in no generator inside W is a cone point of the restriction.
    if (covered == w) {
      std::vector<std::vector<Mask>> faces(static_cast<std::size_t>(popcount(w)) + 1);
      std::vector<int> order = bits_of(w);
      auto grow = [&](auto&& self, std::size_t start, Mask face) -> void {
        faces[popcount(face)].push_back(face);
        for (std::size_t k = start; k < order.size(); ++k) {
          Mask next = face | bit(order[k]);
          bool nonface = std::any_of(inside.begin(), inside.end(), [&](Mask g) { return subset_of(g, next); });
          if (!nonface) self(self, k + 1, next);
        }
      };
      grow(grow, 0, 0);
      while (faces.size() > 1 && faces.back().empty()) faces.pop_back();
      std::vector<long> h = reduced_homology(faces, p);
      int size = popcount(w);
      for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k]) out.entries[{size - static_cast<int>(k), w}] += h[k];  // H~_{|W|-i-1} -> beta_i
    }
    w = (w - vars) & vars;
  } while (w != 0);
  return out;
}

BettiTable hochster_betti(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget) {
  return multigraded_hochster_betti(I, p, budget).coarse();
}

MultigradedBetti multigraded_taylor_betti(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget) {
  check_field(p);
  std::size_t g = I.gens.size();
  if (g > static_cast<std::size_t>(budget.taylor_max_generators))
    throw ResourceError("taylor_betti: " + std::to_string(g) + " generators exceed the budget of " +
                        std::to_string(budget.taylor_max_generators));
  std::size_t subsets = std::size_t{1} << g;
  std::vector<Mask> lcm(subsets, 0);
  for (std::size_t f = 1; f < subsets; ++f) {
    int k = lowest(f);
    lcm[f] = lcm[f & (f - 1)] | I.gens[k];
  }
  std::map<Mask, std::vector<std::size_t>> strands;
  for (std::size_t f = 0; f < subsets; ++f) strands[lcm[f]].push_back(f);

  MultigradedBetti out;
  out.characteristic = p;
  for (const auto& [m, members] : strands) {
    std::vector<std::vector<std::size_t>> by_size(g + 2);
    for (std::size_t f : members) by_size[popcount(f)].push_back(f);
    std::vector<std::size_t> rank(g + 2, 0);
    for (std::size_t s = 1; s <= g; ++s) {
      if (by_size[s].empty() || by_size[s - 1].empty()) continue;
      std::unordered_map<std::size_t, std::uint32_t> index;
      for (std::size_t k = 0; k < by_size[s - 1].size(); ++k)
        index.emplace(by_size[s - 1][k], static_cast<std::uint32_t>(k));
      SparseMatrix d(by_size[s].size(), by_size[s - 1].size());
      for (std::size_t r = 0; r < by_size[s].size(); ++r) {
        std::size_t f = by_size[s][r];
        int pos = 0;
        for_each_bit(f, [&](int k) {
          std::size_t face = f & ~(std::size_t{1} << k);
          // Faces whose lcm drops pick up a variable and vanish modulo the maximal ideal.
          if (lcm[face] == m) d.add(r, index.at(face), (pos % 2) ? -1 : 1);
          ++pos;
        });
      }
      d.finalize();
      rank[s] = rank_over(d, p);
    }
    for (std::size_t s = 0; s <= g; ++s) {
      long h = static_cast<long>(by_size[s].size()) - static_cast<long>(rank[s]) - static_cast<long>(rank[s + 1]);
      if (h) out.entries[{static_cast<int>(s), m}] += h;
    }
  }
  return out;
}

BettiTable taylor_betti(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget) {
  return multigraded_taylor_betti(I, p, budget).coarse();
}

}  // namespace blockbetti
