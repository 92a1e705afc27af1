#include "quillen/smith.hpp"

#include <optional>

#include "quillen/error.hpp"

namespace quillen {

namespace {

// Euclidean structure on ZZ or on k[t] for a single variable t.
class Euclid {
 public:
  static std::optional<Euclid> of(const PolyMatrix& a) {
    std::size_t nv = a.active_vars();
    std::optional<std::size_t> var;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t v = 0; v < nv; ++v)
          if (a(r, c).uses_var(v)) {
            if (var && *var != v) return std::nullopt;
            var = v;
          }
    if (var && !a.ring()->is_field()) return std::nullopt;
    return Euclid(a.ring(), var);
  }

  // Abs value over ZZ, degree over k[t]; larger means bigger.
  mpz_class size(const Poly& p) const {
    if (!ring_->is_field()) return abs(p.constant_term().get_num());
    return var_ ? mpz_class(p.degree_in(*var_)) : mpz_class(0);
  }

  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const {
    if (!ring_->is_field()) {
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.constant_term().get_num_mpz_t(),
                  b.constant_term().get_num_mpz_t());
      return {Poly::constant(ring_, Coeff(q)), Poly::constant(ring_, Coeff(r))};
    }
    if (!var_) return {a.scaled(ring_->inverse(b.constant_term())), Poly(ring_)};
    Coeff inv = ring_->inverse(b.lead_coeff_in(*var_).constant_term());
    auto [q, r] = divmod_by_monic(a, b.scaled(inv), *var_);
    return {q.scaled(inv), std::move(r)};
  }

  /// Unit u such that p / u is normalized (nonnegative or monic).
  Coeff unit_part(const Poly& p) const {
    if (!ring_->is_field()) return Coeff(p.constant_term() < 0 ? -1 : 1);
    return var_ ? p.lead_coeff_in(*var_).constant_term() : p.constant_term();
  }

 private:
  Euclid(RingPtr ring, std::optional<std::size_t> var) : ring_(std::move(ring)), var_(var) {}

  RingPtr ring_;
  std::optional<std::size_t> var_;
};

void swap_rows(PolyMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

// row[dst] += factor * row[src]
void add_row_multiple(PolyMatrix& m, std::size_t dst, std::size_t src, const Poly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(src, c).is_zero()) m(dst, c) += factor * m(src, c);
}

void scale_row(PolyMatrix& m, std::size_t r, const Coeff& s) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = m(r, c).scaled(s);
}

}  // namespace

bool is_euclidean(const PolyMatrix& a) { return Euclid::of(a).has_value(); }

SNFResult smith_normal_form(const PolyMatrix& a) {
  auto euclid = Euclid::of(a);
  if (!euclid) fail(ErrorKind::ShapeError, "entries do not lie in ZZ or a univariate ring over a field");
  const std::size_t m = a.rows(), n = a.cols();
  SNFResult res{PolyMatrix::identity(a.ring(), m), a, PolyMatrix::identity(a.ring(), n)};
  PolyMatrix& d = res.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Pivot: smallest Euclidean size, ties by (row, col).
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      mpz_class best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j).is_zero()) continue;
          mpz_class s = euclid->size(d(i, j));
          if (!piv || s < best) {
            piv = {i, j};
            best = s;
          }
        }
      if (!piv) break;
      swap_rows(d, t, piv->first);
      swap_rows(res.U, t, piv->first);
      d.swap_cols(t, piv->second);
      res.W.swap_cols(t, piv->second);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t).is_zero()) continue;
        auto [q, r] = euclid->divmod(d(i, t), d(t, t));
        add_row_multiple(d, i, t, -q);
        add_row_multiple(res.U, i, t, -q);
        if (!r.is_zero()) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j).is_zero()) continue;
        auto [q, r] = euclid->divmod(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        res.W.add_col_multiple(j, t, -q);
        if (!r.is_zero()) cleared = false;
      }
      if (!cleared) continue;

      // Pivot must divide the rest of the submatrix.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n && !bad_row; ++j)
          if (!d(i, j).is_zero() && !euclid->divmod(d(i, j), d(t, t)).second.is_zero()) bad_row = i;
      if (!bad_row) break;
      add_row_multiple(d, t, *bad_row, Poly::constant(a.ring(), 1));
      add_row_multiple(res.U, t, *bad_row, Poly::constant(a.ring(), 1));
    }
    if (t < m && t < n && !d(t, t).is_zero()) {
      Coeff u = euclid->unit_part(d(t, t));
      if (u != 1) {
        Coeff inv = a.ring()->inverse(u);
        scale_row(d, t, inv);
        scale_row(res.U, t, inv);
      }
    }
  }
  ensure(res.U * a * res.W == res.D, "Smith normal form check failed");
  return res;
}

PolyMatrix solve_row_over_pid(const std::vector<Poly>& row) {
  if (row.empty()) fail(ErrorKind::ShapeError, "empty row");
  const RingPtr& ring = row[0].ring();
  PolyMatrix a = PolyMatrix::from_rows(ring, {row});
  SNFResult snf = smith_normal_form(a);
  if (!snf.D(0, 0).is_one())
    fail(ErrorKind::NotUnimodular, "entries generate (" + to_string(snf.D(0, 0)) + "), not the unit ideal");
  // row * W = U^{-1} * [1, 0, ...]; U is a 1x1 unit.
  PolyMatrix v = snf.W;
  v.scale_col(0, snf.U(0, 0));
  const std::size_t n = row.size();
  if (n >= 2) {
    Poly det = determinant(v);
    ensure(det.is_unit(), "PID solution has non-unit determinant");
    if (!det.is_one()) v.scale_col(n - 1, Poly::constant(ring, ring->inverse(det.constant_term())));
  }
  return v;
}

}  // namespace quillen
