#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace blockbetti {

/// Sparse integer matrix. Entries are collected with add() and compressed
/// into rows by finalize(); row() is valid only after finalize().
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, std::int64_t>;  // (column, value)

  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Accumulates into an existing entry.
  void add(std::size_t r, std::size_t c, std::int64_t v) {
    triplets_.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), v});
  }
  /// Sort by (row, column), merge duplicates, drop zeros.
  void finalize();

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return finalized_ ? entries_.size() : triplets_.size(); }
  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + offsets_[r], entries_.data() + offsets_[r + 1]};
  }

 private:
  struct Triplet {
    std::uint32_t r, c;
    std::int64_t v;
  };
  std::size_t rows_, cols_;
  bool finalized_ = false;
  std::vector<Triplet> triplets_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> offsets_;
};

/// Rank over F_p (p prime, p < 2^31) by row echelon with shortest-row-first pivoting.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

/// Nonzero invariant factors of the integer matrix, in divisibility order.
std::vector<boost::multiprecision::cpp_int> smith_normal_form(const SparseMatrix& m);

/// Rank over the rationals (p == 0) or over F_p.
std::size_t rank_over(const SparseMatrix& m, std::uint32_t p);

bool is_prime(std::uint32_t p);

}  // namespace blockbetti
