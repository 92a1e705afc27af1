#include "quillen/matrix.hpp"

#include <numeric>

#include "quillen/error.hpp"

namespace quillen {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  PolyMatrix m(std::move(ring), rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) fail(ErrorKind::ShapeError, "matrix rows have different lengths");
    for (std::size_t c = 0; c < nc; ++c) {
      if (!same_ring(rows[r][c].ring(), m.ring_)) fail(ErrorKind::RingMismatch, "matrix entry from another ring");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) { return unit_block(std::move(ring), n, n); }

PolyMatrix PolyMatrix::unit_block(RingPtr ring, std::size_t m, std::size_t n) {
  PolyMatrix out(ring, m, n);
  for (std::size_t i = 0; i < std::min(m, n); ++i) out(i, i) = Poly::constant(ring, 1);
  return out;
}

std::vector<Poly> PolyMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<Poly> PolyMatrix::col(std::size_t c) const {
  std::vector<Poly> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  PolyMatrix out(ring_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
  return out;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  std::vector<std::size_t> rs(nr), cs(nc);
  std::iota(rs.begin(), rs.end(), r0);
  std::iota(cs.begin(), cs.end(), c0);
  return submatrix(rs, cs);
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::ShapeError, "matrix product dimension mismatch");
  PolyMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::ShapeError, "matrix sum dimension mismatch");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::ShapeError, "matrix difference dimension mismatch");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

PolyMatrix PolyMatrix::scaled(const Poly& s) const {
  return map([&](const Poly& p) { return p * s; });
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  for (const auto& p : data_)
    if (!p.is_constant()) return false;
  return true;
}

std::size_t PolyMatrix::active_vars() const {
  std::size_t n = 0;
  for (const auto& p : data_) n = std::max(n, p.active_vars());
  return n;
}

void PolyMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void PolyMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Poly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!(*this)(r, src).is_zero()) (*this)(r, dst) += factor * (*this)(r, src);
}

void PolyMatrix::scale_col(std::size_t c, const Poly& factor) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) *= factor;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(to_string((*this)(r, c)));
  return out;
}

std::string PolyMatrix::str() const {
  std::string s;
  for (const auto& row : to_strings()) {
    s += "|";
    for (const auto& e : row) s += " " + e;
    s += " |\n";
  }
  return s;
}

std::vector<Poly> row_times(const std::vector<Poly>& row, const PolyMatrix& m) {
  if (row.size() != m.rows()) fail(ErrorKind::ShapeError, "row length does not match matrix");
  std::vector<Poly> out(m.cols(), Poly(m.ring()));
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) out[j] += row[k] * m(k, j);
  }
  return out;
}

namespace {

Poly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.ring(), 1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Poly det(m.ring());
  std::vector<std::size_t> rows(n - 1);
  std::iota(rows.begin(), rows.end(), 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Poly term = m(0, j) * cofactor_det(m.submatrix(rows, cols));
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

Poly bareiss_det(PolyMatrix a) {
  const std::size_t n = a.rows();
  Poly prev = Poly::constant(a.ring(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return Poly(a.ring());
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = exact_divide(num, prev);
        ensure(q.has_value(), "Bareiss step is not exact");
        a(i, j) = std::move(*q);
      }
    prev = a(k, k);
  }
  Poly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeError, "determinant of a non-square matrix");
  return m.rows() <= 4 ? cofactor_det(m) : bareiss_det(m);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeError, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix adj(m.ring(), n, n);
  if (n == 1) {
    adj(0, 0) = Poly::constant(m.ring(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      Poly minor = determinant(m.submatrix(rows, cols));
      adj(i, j) = (i + j) % 2 ? -minor : minor;
    }
  return adj;
}

PolyMatrix inverse_unimodular(const PolyMatrix& m) {
  Poly det = determinant(m);
  if (!det.is_unit()) fail(ErrorKind::NotAUnit, "determinant " + to_string(det) + " is not a unit");
  Coeff inv = m.ring()->inverse(det.constant_term());
  return adjugate(m).map([&](const Poly& p) { return p.scaled(inv); });
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Poly> minors(const PolyMatrix& m, std::size_t k) {
  std::vector<Poly> out;
  if (k > m.rows() || k > m.cols()) return out;
  for (const auto& rs : subsets(m.rows(), k))
    for (const auto& cs : subsets(m.cols(), k)) out.push_back(determinant(m.submatrix(rs, cs)));
  return out;
}

}  // namespace quillen
