#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockbetti/betti_table.hpp"
#include "blockbetti/graph.hpp"
#include "blockbetti/groebner.hpp"
#include "blockbetti/monomial_betti.hpp"

namespace blockbetti {

/// Which multidegrees the Koszul engine visits.
enum class SupportMode {
  /// Every multidegree of total degree at most pd + reg of S/in(J).
  kExhaustive,
  /// Only multidegrees carrying a nonzero Betti number of S/in(J); the
  /// remaining ones vanish by upper semicontinuity in the fine grading.
  kInitialSupport,
};

struct BinomialOptions {
  std::optional<std::vector<Bidegree>> window;
  SupportMode support = SupportMode::kExhaustive;
  int max_variables_full = 12;
  int max_variables_window = 16;
  std::size_t max_nonzeros = 2'000'000;
  BuchbergerBudget buchberger{.max_variables = 16};
  MonomialBudget monomial{};
  int threads = 1;
};

struct BinomialBetti {
  BettiTable table;
  SupportMode support = SupportMode::kExhaustive;
  std::size_t complexes = 0;      // multidegree strands assembled
  std::size_t largest_matrix = 0; // nonzeros in the largest differential
};

/// beta_{i,j}(S/J_G) over F_p as Koszul homology of S/J_G, split by the
/// N^n x Z grading deg x_k = deg y_k = e_k plus x-degree. Multiplication by a
/// variable is the normal form modulo the reduced lex Groebner basis.
BinomialBetti betti_binomial(const Graph& g, std::uint32_t p, const BinomialOptions& options = {});

/// beta_{i,i+1}(S/J_{K_n}) = i * C(n, i+1), 1 <= i <= n-1, plus beta_{0,0} = 1.
BettiTable clique_betti_oracle(int n);

/// Coefficients of HS(t) * (1-t)^{nvars} for S/I in degrees 0..max_degree,
/// counted from the faces of the Stanley-Reisner complex.
std::vector<long> hilbert_numerator(const MonomialIdeal& I, int max_degree);

/// sum_i (-1)^i beta_{i,j} for j = 0..max_degree.
std::vector<long> alternating_betti_sums(const BettiTable& t, int max_degree);

}  // namespace blockbetti
