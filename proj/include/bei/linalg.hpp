#pragma once
// Exact rank computations over prime fields.
//
// Three independent routines:
//  * BitMatrixGF2: dense bit-packed Gaussian elimination over GF(2);
//  * SparseRowEchelon: incremental sparse row echelon form over GF(p);
//  * ColumnReducer: low-pivot column reduction (the scheme used for
//    boundary matrices), over GF(p).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bei {

/// GF(p) for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1U << 31)) throw std::invalid_argument("field characteristic must be a prime < 2^31, got " + std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_); }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    std::uint64_t result = 1, base = a;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<std::uint32_t>(result);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

/// Sparse vector entry (index, nonzero coefficient).
using SparseEntry = std::pair<std::uint32_t, std::uint32_t>;
using SparseVector = std::vector<SparseEntry>;

namespace detail {

// a + factor * b for index-sorted sparse vectors.
inline SparseVector axpy(const PrimeField& f, const SparseVector& a, std::uint32_t factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.mul(factor, b[j].second));
      ++j;
    } else {
      const std::uint32_t c = f.add(a[i].second, f.mul(factor, b[j].second));
      if (c) out.emplace_back(a[i].first, c);
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Dense GF(2) matrix with rows packed into 64-bit words.
class BitMatrixGF2 {
 public:
  BitMatrixGF2(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_) {}

  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  bool get(std::size_t r, std::size_t c) const { return (data_[r * words_ + c / 64] >> (c % 64)) & 1; }

  std::size_t rank() const {
    std::vector<std::uint64_t> m = data_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      std::size_t pivot = rank;
      while (pivot < rows_ && !(m[pivot * words_ + w] & bit)) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank)
        std::swap_ranges(m.begin() + pivot * words_, m.begin() + (pivot + 1) * words_, m.begin() + rank * words_);
      for (std::size_t r = rank + 1; r < rows_; ++r)
        if (m[r * words_ + w] & bit)
          for (std::size_t k = w; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
      ++rank;
    }
    return rank;
  }

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> data_;
};

/// Row echelon form built one sparse row at a time; rank = number of pivots.
class SparseRowEchelon {
 public:
  explicit SparseRowEchelon(PrimeField field) : f_(field) {}

  /// Returns true if the row was independent of the rows added so far.
  bool add_row(SparseVector row) {
    std::sort(row.begin(), row.end());
    for (auto& e : row) e.second = f_.reduce(e.second);
    std::erase_if(row, [](const SparseEntry& e) { return e.second == 0; });
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const std::uint32_t scale = f_.inv(row.front().second);
        for (auto& e : row) e.second = f_.mul(e.second, scale);
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      row = detail::axpy(f_, row, f_.neg(row.front().second), it->second);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  PrimeField f_;
  std::unordered_map<std::uint32_t, SparseVector> pivots_;
};

/// Rank of a matrix given as sparse rows, choosing the dense bit-packed
/// routine for GF(2) when it fits in memory.
inline std::size_t sparse_matrix_rank(const std::vector<SparseVector>& rows, std::size_t cols, const PrimeField& f) {
  if (rows.empty() || cols == 0) return 0;
  if (f.characteristic() == 2 && rows.size() * cols <= (std::size_t{1} << 28)) {
    BitMatrixGF2 m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r])
        if (v & 1) m.flip(r, c);
    return m.rank();
  }
  SparseRowEchelon e(f);
  for (const auto& r : rows) e.add_row(r);
  return e.rank();
}

/// Column reduction with "lowest nonzero row" pivots. Columns are added one at
/// a time and reduced against earlier columns; the number of nonzero reduced
/// columns is the rank.
class ColumnReducer {
 public:
  explicit ColumnReducer(PrimeField field) : f_(field) {}

  /// Reduces `col` (entries sorted by row) and returns its pivot row, or -1 if
  /// the column became zero.
  long long add_column(SparseVector col) {
    while (!col.empty()) {
      const std::uint32_t low = col.back().first;
      auto it = pivot_.find(low);
      if (it == pivot_.end()) {
        pivot_.emplace(low, std::move(col));
        return low;
      }
      const SparseVector& other = it->second;
      const std::uint32_t factor = f_.neg(f_.mul(col.back().second, f_.inv(other.back().second)));
      col = detail::axpy(f_, col, factor, other);
    }
    return -1;
  }

  std::size_t rank() const { return pivot_.size(); }

 private:
  PrimeField f_;
  std::unordered_map<std::uint32_t, SparseVector> pivot_;
};

}  // namespace bei
