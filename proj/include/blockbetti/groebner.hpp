#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "blockbetti/graph.hpp"
#include "blockbetti/monomial.hpp"

namespace blockbetti {

/// lead - trail, with lead lex-greater than trail.
struct Binomial {
  Monomial lead;
  Monomial trail;
  bool operator==(const Binomial&) const = default;
};

/// x_i y_j - x_j y_i for every edge {i, j}, i < j.
std::vector<Binomial> binomial_generators(const Graph& g);

/// Path i = v_0, ..., v_r = j (i < j) with distinct vertices, internal vertices
/// outside [i, j], and no i-j path through a proper subset of the internal vertices.
struct AdmissiblePath {
  std::vector<int> vertices;
  Monomial u;          // x_v for internal v > j, y_v for internal v < i
  Monomial generator;  // x_i y_j u
};

std::vector<AdmissiblePath> admissible_paths(const Graph& g);

/// Lex initial ideal of the binomial edge ideal, from admissible paths, minimalized.
MonomialIdeal initial_ideal(const Graph& g);

struct BuchbergerBudget {
  int max_variables = 16;
  std::size_t max_basis = 20000;
  std::size_t max_pairs = 2000000;
};

/// Reduced lex Groebner basis of a pure-difference binomial ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(int n, std::vector<Binomial> basis);

  int n() const { return n_; }
  const std::vector<Binomial>& elements() const { return basis_; }
  MonomialIdeal leading_ideal() const;

  /// Standard monomial congruent to m. Pure-difference bases send monomials
  /// to monomials with coefficient 1.
  Monomial normal_form(const Monomial& m) const;
  bool is_standard(const Monomial& m) const;

 private:
  int n_;
  std::vector<Binomial> basis_;
};

/// Buchberger's algorithm on binomial_generators(g). Throws ResourceError
/// when the budget is exceeded.
GroebnerBasis buchberger(const Graph& g, const BuchbergerBudget& budget = {});
MonomialIdeal buchberger_initial_ideal(const Graph& g, const BuchbergerBudget& budget = {});

/// Basis of (S/J_G)_d: degree-d monomials outside the initial ideal.
std::vector<Monomial> standard_monomials(const MonomialIdeal& initial, int n, int d);

/// Normal form of m * var modulo the basis.
Monomial normal_form(const Monomial& m, Variable var, const GroebnerBasis& gb);

}  // namespace blockbetti
