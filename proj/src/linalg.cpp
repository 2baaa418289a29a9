#include "blockbetti/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "blockbetti/errors.hpp"

namespace blockbetti {

using boost::multiprecision::cpp_int;

void SparseMatrix::finalize() {
  std::sort(triplets_.begin(), triplets_.end(),
            [](const Triplet& a, const Triplet& b) { return a.r != b.r ? a.r < b.r : a.c < b.c; });
  entries_.clear();
  offsets_.assign(rows_ + 1, 0);
  std::size_t k = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    offsets_[r] = entries_.size();
    while (k < triplets_.size() && triplets_[k].r == r) {
      std::uint32_t c = triplets_[k].c;
      std::int64_t v = 0;
      for (; k < triplets_.size() && triplets_[k].r == r && triplets_[k].c == c; ++k) v += triplets_[k].v;
      if (v) entries_.emplace_back(c, v);
    }
  }
  offsets_[rows_] = entries_.size();
  triplets_.clear();
  triplets_.shrink_to_fit();
  finalized_ = true;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

using ModRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// row := row - factor * pivot, both sorted by column.
void subtract_multiple(ModRow& row, const ModRow& pivot, std::uint32_t factor, std::uint32_t p, ModRow& scratch) {
  scratch.clear();
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      scratch.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      std::uint64_t v = (p - static_cast<std::uint64_t>(factor) * pivot[b].second % p) % p;
      scratch.emplace_back(pivot[b].first, static_cast<std::uint32_t>(v));
      ++b;
    } else {
      std::uint64_t v = (row[a].second + p - static_cast<std::uint64_t>(factor) * pivot[b].second % p) % p;
      if (v) scratch.emplace_back(row[a].first, static_cast<std::uint32_t>(v));
      ++a;
      ++b;
    }
  }
  row.swap(scratch);
}

// Bit-packed elimination over F_2 for matrices that fit in memory densely.
std::size_t rank_gf2_dense(const SparseMatrix& m) {
  std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> pivot_rows;  // row-major, `words` per pivot
  std::vector<std::int64_t> pivot_of(m.cols(), -1);
  std::vector<std::uint64_t> row(words);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::fill(row.begin(), row.end(), 0);
    for (auto [c, v] : m.row(r))
      if (v % 2) row[c / 64] ^= std::uint64_t{1} << (c % 64);
    for (std::size_t w = 0; w < words; ++w) {
      while (row[w]) {
        std::size_t c = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
        std::int64_t k = pivot_of[c];
        if (k < 0) {
          pivot_of[c] = static_cast<std::int64_t>(rank++);
          pivot_rows.insert(pivot_rows.end(), row.begin(), row.end());
          goto next_row;
        }
        const std::uint64_t* pr = pivot_rows.data() + static_cast<std::size_t>(k) * words;
        for (std::size_t u = w; u < words; ++u) row[u] ^= pr[u];
      }
    }
  next_row:;
  }
  return rank;
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  if (!is_prime(p) || p >= (1U << 31)) throw PreconditionError("rank_mod_p: modulus must be a prime below 2^31");
  std::vector<ModRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ModRow row;
    for (auto [c, v] : m.row(r)) {
      std::int64_t x = v % static_cast<std::int64_t>(p);
      if (x < 0) x += p;
      if (x) row.emplace_back(c, static_cast<std::uint32_t>(x));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ModRow& a, const ModRow& b) { return a.size() < b.size(); });

  std::vector<std::int64_t> pivot_of(m.cols(), -1);
  std::vector<ModRow> pivots;
  ModRow scratch;
  for (auto& row : rows) {
    while (!row.empty()) {
      std::uint32_t lead = row.front().first;
      std::int64_t k = pivot_of[lead];
      if (k < 0) {
        std::uint32_t inv = inverse_mod(row.front().second, p);
        for (auto& e : row) e.second = static_cast<std::uint32_t>(static_cast<std::uint64_t>(e.second) * inv % p);
        pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      subtract_multiple(row, pivots[static_cast<std::size_t>(k)], row.front().second, p, scratch);
    }
  }
  return pivots.size();
}

std::vector<cpp_int> smith_normal_form(const SparseMatrix& m) {
  std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<cpp_int>> a(R, std::vector<cpp_int>(C, 0));
  for (std::size_t r = 0; r < R; ++r)
    for (auto [c, v] : m.row(r)) a[r][c] += v;

  std::vector<cpp_int> diag;
  std::size_t t = 0;
  while (t < R && t < C) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    std::size_t pr = R, pc = C;
    for (std::size_t r = t; r < R; ++r)
      for (std::size_t c = t; c < C; ++c)
        if (a[r][c] != 0 && (pr == R || abs(a[r][c]) < abs(a[pr][pc]))) pr = r, pc = c;
    if (pr == R) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (a[r][t] == 0) continue;
        cpp_int q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < C; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {
          std::swap(a[t], a[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (a[t][c] == 0) continue;
        cpp_int q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < R; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (auto& row : a) std::swap(row[t], row[c]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  // Enforce d_1 | d_2 | ... via gcd/lcm exchanges.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      cpp_int g = boost::multiprecision::gcd(diag[i], diag[j]);
      cpp_int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::size_t rank_over(const SparseMatrix& m, std::uint32_t p) {
  if (p == 0) return smith_normal_form(m).size();
  if (p == 2 && m.rows() * m.cols() <= (std::size_t{1} << 27)) return rank_gf2_dense(m);
  return rank_mod_p(m, p);
}

}  // namespace blockbetti
