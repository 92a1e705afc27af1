#pragma once

#include <string>
#include <vector>

#include "quillen/poly.hpp"

namespace quillen {

/// Dense rows x cols matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  /// Builds from rows; every row must have the same length.
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows);
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  /// [I_m | 0], m x n.
  static PolyMatrix unit_block(RingPtr ring, std::size_t m, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Poly> row(std::size_t r) const;
  std::vector<Poly> col(std::size_t c) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Contiguous block [r0, r0+nr) x [c0, c0+nc).
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  PolyMatrix transpose() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix scaled(const Poly& s) const;

  bool operator==(const PolyMatrix& other) const;
  bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

  bool is_zero() const;
  /// True iff every entry is a constant.
  bool is_constant() const;
  /// One past the highest variable index used by any entry.
  std::size_t active_vars() const;

  // Elementary column operations, applied in place.
  void swap_cols(std::size_t i, std::size_t j);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Poly& factor);
  void scale_col(std::size_t c, const Poly& factor);

  /// Entrywise map.
  template <class F>
  PolyMatrix map(F&& fn) const {
    PolyMatrix out(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fn(data_[i]);
    return out;
  }
  /// Entrywise map into another ring.
  template <class F>
  PolyMatrix map(const RingPtr& target, F&& fn) const {
    PolyMatrix out(target, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fn(data_[i]);
    return out;
  }

  /// Rows of canonical polynomial strings.
  std::vector<std::vector<std::string>> to_strings() const;
  std::string str() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> data_;
};

/// Multiplies a row vector by a matrix.
std::vector<Poly> row_times(const std::vector<Poly>& row, const PolyMatrix& m);

/// Determinant by cofactor expansion up to 4x4, fraction-free Bareiss above.
Poly determinant(const PolyMatrix& m);
/// Classical adjugate: m * adj(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);
/// Inverse of a matrix whose determinant is a unit of the coefficient ring.
/// Throws NotAUnit otherwise.
PolyMatrix inverse_unimodular(const PolyMatrix& m);

/// All k-element index subsets of [0, n), lexicographic.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);
/// All k x k minors of m (empty when k exceeds a dimension).
std::vector<Poly> minors(const PolyMatrix& m, std::size_t k);

}  // namespace quillen
