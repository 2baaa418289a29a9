#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "blockbetti/betti_table.hpp"
#include "blockbetti/monomial.hpp"

namespace blockbetti {

struct MonomialBudget {
  int max_variables = 20;
  std::size_t max_lattice = 50000;
  std::size_t max_generators = 512;
  int hochster_max_variables = 20;
  int taylor_max_generators = 12;
  int threads = 1;
};

/// Distinct lcms of nonempty generator subsets, plus the bottom element 0
/// (the unit monomial) at index 0. Sorted by degree, then mask.
struct LcmLattice {
  std::vector<Mask> elements;
  Mask top() const { return elements.back(); }
};

/// Join closure of the generators. Throws ResourceError past the budget.
LcmLattice lcm_lattice(const MonomialIdeal& I, const MonomialBudget& budget = {});

/// beta_{i,sigma}(S/I) for squarefree multidegrees sigma (variable masks).
struct MultigradedBetti {
  std::uint32_t characteristic = 2;
  std::map<std::pair<int, Mask>, long> entries;
  BettiTable coarse() const;
  bool operator==(const MultigradedBetti& o) const { return entries == o.entries; }
};

/// Reduced homology (h[k] = H~_{k-1}) of the open interval (0, sigma) of an
/// lcm lattice, given the generators below sigma and the coatoms of [0, sigma].
/// Groups below min_dim may be reported as zero.
std::vector<long> interval_homology(const std::vector<Mask>& atoms, const std::vector<Mask>& coatoms,
                                    std::uint32_t p, int min_dim = -1);

/// Homology of the open lcm-lattice interval below each lattice element,
/// computed on a crosscut complex. With from_column > 0 only beta_i for
/// i >= from_column are computed.
MultigradedBetti multigraded_betti_monomial(const MonomialIdeal& I, std::uint32_t p,
                                            const MonomialBudget& budget = {}, int from_column = 0);
BettiTable betti_monomial(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget = {});

/// Partial table holding every beta_{i,j} with i >= from_column (total when from_column <= 0).
BettiTable betti_monomial_columns(const MonomialIdeal& I, std::uint32_t p, int from_column,
                                  const MonomialBudget& budget = {});

/// Hochster's formula over all subsets of the variables that occur in I.
MultigradedBetti multigraded_hochster_betti(const MonomialIdeal& I, std::uint32_t p,
                                            const MonomialBudget& budget = {});
BettiTable hochster_betti(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget = {});

/// Homology of the multigraded Taylor complex tensored with the residue field.
MultigradedBetti multigraded_taylor_betti(const MonomialIdeal& I, std::uint32_t p,
                                          const MonomialBudget& budget = {});
BettiTable taylor_betti(const MonomialIdeal& I, std::uint32_t p, const MonomialBudget& budget = {});

}  // namespace blockbetti
