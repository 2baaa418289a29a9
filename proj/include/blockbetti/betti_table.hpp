#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace blockbetti {

using Bidegree = std::pair<int, int>;  // (homological degree i, internal degree j)

/// Graded Betti numbers beta_{i,j} of a quotient S/I. Absent entries are zero.
/// A partial table records which bidegrees were actually computed.
struct BettiTable {
  std::uint32_t characteristic = 2;
  bool total = true;
  std::map<Bidegree, long> entries;  // nonzero only
  std::set<Bidegree> computed;       // meaningful when !total

  void add(int i, int j, long beta);
  long at(int i, int j) const;
  /// nullopt when the table is partial and (i, j) was not computed.
  std::optional<long> query(int i, int j) const;

  int regularity() const;
  int projdim() const;
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

struct ExtremalEntry {
  int i = 0;
  int j = 0;  // internal degree
  long beta = 0;
  bool operator==(const ExtremalEntry&) const = default;
};

struct TableAnalytics {
  int reg = 0;
  int pd = 0;
  std::vector<ExtremalEntry> extremal;  // ordered by homological degree
  ExtremalEntry reg_extremal;           // on the top strand
  ExtremalEntry pd_extremal;            // in the last column
  bool single_extremal() const { return reg_extremal == pd_extremal; }
};

/// Throws PreconditionError on partial tables.
TableAnalytics table_analytics(const BettiTable& t);

/// Coefficientwise product of Betti polynomials.
BettiTable betti_polynomial_product(const BettiTable& a, const BettiTable& b);

/// sum beta_{i,j} s^i t^j, terms ordered by (i, j).
std::string betti_polynomial_string(const BettiTable& t);

/// Macaulay2-style rendering: columns i, rows j - i.
std::string render_table(const BettiTable& t);

/// Table of S/I for the ideal table of I (shift i by one, add beta_{0,0}) and back.
BettiTable quotient_from_ideal(const BettiTable& ideal);
BettiTable ideal_from_quotient(const BettiTable& quotient);

}  // namespace blockbetti
