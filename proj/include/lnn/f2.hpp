// Copyright 2026 The lnn-cnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lnn {

/// Largest supported vector/matrix dimension; every column is one 64-bit word.
inline constexpr std::size_t kMaxDim = 64;

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline void check_dim(std::size_t n, std::size_t min_dim = 0) {
  if (n < min_dim || n > kMaxDim) {
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " outside supported range [" +
                                std::to_string(min_dim) + ", 64]");
  }
}

}  // namespace detail

/// A vector in F_2^n. Coordinate k (1-based) lives in bit k-1 of the word, so
/// numeric comparison of words coincides with the lexicographic order that
/// treats higher indices as more significant.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n, std::uint64_t bits = 0)
      : n_(n), bits_(bits & detail::low_mask(n)) {
    detail::check_dim(n);
  }

  static BitVector unit(std::size_t n, std::size_t k) {
    BitVector v(n);
    v.set(k, true);
    return v;
  }

  std::size_t size() const { return n_; }
  std::uint64_t word() const { return bits_; }

  bool get(std::size_t k) const {
    check_index(k);
    return (bits_ >> (k - 1)) & 1U;
  }
  void set(std::size_t k, bool value) {
    check_index(k);
    const std::uint64_t bit = std::uint64_t{1} << (k - 1);
    bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
  }
  void flip(std::size_t k) {
    check_index(k);
    bits_ ^= std::uint64_t{1} << (k - 1);
  }

  bool is_zero() const { return bits_ == 0; }
  std::size_t weight() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  /// 1-based index of the most significant nonzero coordinate, 0 for the zero vector.
  std::size_t leading_index() const {
    return bits_ == 0 ? 0 : static_cast<std::size_t>(std::bit_width(bits_));
  }

  bool dot(const BitVector& other) const {
    check_same(other);
    return std::popcount(bits_ & other.bits_) & 1;
  }

  BitVector& operator^=(const BitVector& other) {
    check_same(other);
    bits_ ^= other.bits_;
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// '0'/'1' characters, coordinate 1 first.
  std::string str() const {
    std::string s(n_, '0');
    for (std::size_t k = 1; k <= n_; ++k) {
      if (get(k)) s[k - 1] = '1';
    }
    return s;
  }

 private:
  void check_index(std::size_t k) const {
    if (k < 1 || k > n_) throw std::out_of_range("BitVector index out of range");
  }
  void check_same(const BitVector& other) const {
    if (other.n_ != n_) throw std::invalid_argument("BitVector dimension mismatch");
  }

  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

/// u < v in the order where the highest differing coordinate decides.
inline bool lex_less(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("lex_less: dimension mismatch");
  return u.word() < v.word();
}

/// Rank of a list of equal-length packed words (columns or rows; rank is the same).
inline std::size_t rank_of_words(std::vector<std::uint64_t> words) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t pivot = words[i];
    if (pivot == 0) continue;
    ++rank;
    const std::uint64_t lead = std::uint64_t{1} << (std::bit_width(pivot) - 1);
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[j] & lead) words[j] ^= pivot;
    }
  }
  return rank;
}

/// A rectangular F_2 matrix stored by columns; used for the blocks of a cut.
struct BitBlock {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> columns;  // bit r-1 of columns[c-1] = entry (r, c)

  BitBlock() = default;
  BitBlock(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c, 0) {
    detail::check_dim(r);
  }

  bool get(std::size_t r, std::size_t c) const { return (columns[c - 1] >> (r - 1)) & 1U; }
  void set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (r - 1);
    columns[c - 1] = value ? (columns[c - 1] | bit) : (columns[c - 1] & ~bit);
  }
  friend bool operator==(const BitBlock&, const BitBlock&) = default;
};

inline std::size_t rank(const BitBlock& block) { return rank_of_words(block.columns); }

/// Square F_2 matrix. Column j holds the value of wire j expressed over the
/// initial wire values: entry (i, j) is 1 iff wire j depends on a_i.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), cols_(n, 0) { detail::check_dim(n, 1); }

  static BitMatrix zero(std::size_t n) { return BitMatrix(n); }
  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) m.cols_[j] = std::uint64_t{1} << j;
    return m;
  }
  /// Ones on the anti-diagonal: the wire reversal.
  static BitMatrix anti_identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) m.cols_[j] = std::uint64_t{1} << (n - 1 - j);
    return m;
  }
  static BitMatrix from_columns(std::span<const BitVector> columns) {
    BitMatrix m(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != columns.size()) {
        throw std::invalid_argument("from_columns: matrix must be square");
      }
      m.cols_[j] = columns[j].word();
    }
    return m;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    check(i, j);
    return (cols_[j - 1] >> (i - 1)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value) {
    check(i, j);
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    cols_[j - 1] = value ? (cols_[j - 1] | bit) : (cols_[j - 1] & ~bit);
  }

  BitVector column(std::size_t j) const {
    check(1, j);
    return BitVector(n_, cols_[j - 1]);
  }
  void set_column(std::size_t j, const BitVector& v) {
    check(1, j);
    if (v.size() != n_) throw std::invalid_argument("set_column: dimension mismatch");
    cols_[j - 1] = v.word();
  }
  BitVector row(std::size_t i) const {
    check(i, 1);
    BitVector r(n_);
    for (std::size_t j = 1; j <= n_; ++j) r.set(j, get(i, j));
    return r;
  }

  /// column[target] ^= column[source]; the action of one CNOT on the wire state.
  void add_column(std::size_t target, std::size_t source) {
    check(1, target);
    check(1, source);
    cols_[target - 1] ^= cols_[source - 1];
  }

  std::span<const std::uint64_t> column_words() const { return cols_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw std::out_of_range("BitMatrix index out of range");
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> cols_;
};

inline std::size_t rank(const BitMatrix& m) {
  auto words = m.column_words();
  return rank_of_words({words.begin(), words.end()});
}

inline bool is_invertible(const BitMatrix& m) { return rank(m) == m.size(); }

inline BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multiply: dimension mismatch");
  const std::size_t n = a.size();
  BitMatrix out(n);
  auto acols = a.column_words();
  for (std::size_t j = 1; j <= n; ++j) {
    std::uint64_t bcol = b.column_words()[j - 1];
    std::uint64_t acc = 0;
    while (bcol) {
      acc ^= acols[static_cast<std::size_t>(std::countr_zero(bcol))];
      bcol &= bcol - 1;
    }
    out.set_column(j, BitVector(n, acc));
  }
  return out;
}

inline BitMatrix transpose(const BitMatrix& m) {
  const std::size_t n = m.size();
  BitMatrix t(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (m.get(i, j)) t.set(j, i, true);
    }
  }
  return t;
}

/// Gauss-Jordan on columns. Throws SingularMatrixError when rank < n.
inline BitMatrix inverse(const BitMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::uint64_t> work(m.column_words().begin(), m.column_words().end());
  std::vector<std::uint64_t> inv(n);
  for (std::size_t j = 0; j < n; ++j) inv[j] = std::uint64_t{1} << j;
  // Column operations on (M | I) until M becomes I; the same operations turn I into M^-1.
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint64_t bit = std::uint64_t{1} << r;
    std::size_t pivot = r;
    while (pivot < n && !(work[pivot] & bit)) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular over F_2");
    std::swap(work[r], work[pivot]);
    std::swap(inv[r], inv[pivot]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != r && (work[j] & bit)) {
        work[j] ^= work[r];
        inv[j] ^= inv[r];
      }
    }
  }
  BitMatrix out(n);
  for (std::size_t j = 1; j <= n; ++j) out.set_column(j, BitVector(n, inv[j - 1]));
  return out;
}

inline bool is_northwest_triangular(const BitMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t j = 1; j <= n; ++j) {
    // rows i > n + 1 - j must be zero in column j
    const std::size_t keep = n + 1 - j;
    if (m.column_words()[j - 1] & ~detail::low_mask(keep)) return false;
  }
  return true;
}

/// The lexicographically least element of a + span(spanning_set).
inline BitVector lex_min_coset(const BitVector& a, std::span<const BitVector> spanning_set) {
  // Echelon basis indexed by leading coordinate; cancel a's bits from the top down.
  std::vector<std::uint64_t> by_lead(kMaxDim + 1, 0);
  for (const auto& s : spanning_set) {
    if (s.size() != a.size()) throw std::invalid_argument("lex_min_coset: dimension mismatch");
    std::uint64_t w = s.word();
    while (w) {
      const auto lead = static_cast<std::size_t>(std::bit_width(w));
      if (!by_lead[lead]) {
        by_lead[lead] = w;
        break;
      }
      w ^= by_lead[lead];
    }
  }
  std::uint64_t x = a.word();
  for (std::size_t lead = a.size(); lead >= 1; --lead) {
    if (by_lead[lead] && ((x >> (lead - 1)) & 1U)) x ^= by_lead[lead];
  }
  return BitVector(a.size(), x);
}

/// W X / Y Z partition of a matrix at cut k (rows/cols 1..k versus k+1..n).
struct CutBlocks {
  std::size_t k = 0;
  BitBlock w, x, y, z;
};

inline CutBlocks blocks(const BitMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k < 1 || k >= n) throw std::out_of_range("cut position must satisfy 1 <= k < n");
  CutBlocks b{k, BitBlock(k, k), BitBlock(k, n - k), BitBlock(n - k, k), BitBlock(n - k, n - k)};
  const std::uint64_t top = detail::low_mask(k);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::uint64_t col = m.column_words()[j - 1];
    if (j <= k) {
      b.w.columns[j - 1] = col & top;
      b.y.columns[j - 1] = col >> k;
    } else {
      b.x.columns[j - k - 1] = col & top;
      b.z.columns[j - k - 1] = col >> k;
    }
  }
  return b;
}

inline BitMatrix reassemble(const CutBlocks& b) {
  const std::size_t k = b.k;
  const std::size_t n = k + b.z.rows;
  BitMatrix m(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::uint64_t col = j <= k ? (b.w.columns[j - 1] | (b.y.columns[j - 1] << k))
                                     : (b.x.columns[j - k - 1] | (b.z.columns[j - k - 1] << k));
    m.set_column(j, BitVector(n, col));
  }
  return m;
}

/// d with x.d equal to the coefficient of basis[k] when x is expanded in the
/// basis; so x lies in span{basis[l] : l != k} iff x.d == 0. This is row k of
/// the inverse of the basis matrix.
inline BitVector dual_functional(std::span<const BitVector> basis, std::size_t k) {
  if (k < 1 || k > basis.size()) throw std::out_of_range("dual_functional: index out of range");
  return inverse(BitMatrix::from_columns(basis)).row(k);
}

/// All n dual functionals at once (rows of the inverse basis matrix).
inline std::vector<BitVector> dual_basis(std::span<const BitVector> basis) {
  const BitMatrix inv = transpose(inverse(BitMatrix::from_columns(basis)));
  std::vector<BitVector> out;
  out.reserve(basis.size());
  for (std::size_t k = 1; k <= basis.size(); ++k) out.push_back(inv.column(k));
  return out;
}

}  // namespace lnn
