#include "quillen/horrocks.hpp"

#include <optional>

#include "quillen/error.hpp"

namespace quillen {

LocalElem LocalSolution::entry(std::size_t i, std::size_t j) const { return {numerator(i, j), entry_den}; }

namespace {

// Working state: M is the accumulated transform, p = f * M.
class HorrocksRun {
 public:
  HorrocksRun(const std::vector<Poly>& f, std::size_t y, const MaxIdeal& m)
      : ring_(f.front().ring()),
        y_(y),
        local_(BaseRing(ring_, y), m),
        n_(f.size()),
        M_(PolyMatrix::identity(ring_, f.size())),
        p_(f) {}

  LocalSolution run(HorrocksTrace* trace) {
    while (true) {
      if (auto j = local_unit_entry()) {
        finish_with_unit(*j);
        break;
      }
      std::size_t j = pivot_entry();
      swap(0, j);
      const long deg = p_[0].degree_in(y_);
      if (trace) trace->pivot_degrees.push_back(deg);
      reduce_by_pivot();
      if (has_better_pivot(deg)) continue;
      lower_degree(deg);
    }
    LocalSolution sol{{}, y_, local_.ideal(), M_, p_[0], product_of_factors(), determinant(M_)};
    return sol;
  }

 private:
  bool unit(const Poly& a) const { return local_.is_unit(a); }

  void note_factor(const Poly& a) {
    if (a.is_unit()) return;
    for (const auto& f : factors_)
      if (f == a || f == -a) return;
    factors_.push_back(a);
  }

  Poly product_of_factors() const {
    Poly d = Poly::constant(ring_, 1);
    for (const auto& f : factors_) d *= f;
    return d;
  }

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    M_.swap_cols(i, j);
    std::swap(p_[i], p_[j]);
  }

  // col[k] := s * col[k] + t * col[src], applied to M and p.
  void combine(std::size_t k, const Poly& s, std::size_t src, const Poly& t) {
    if (!s.is_one()) {
      M_.scale_col(k, s);
      p_[k] *= s;
    }
    M_.add_col_multiple(k, src, t);
    p_[k] += t * p_[src];
  }

  std::optional<std::size_t> local_unit_entry() const {
    for (std::size_t j = 0; j < n_; ++j)
      if (unit(p_[j])) return j;
    return std::nullopt;
  }

  bool has_unit_lead(const Poly& a) const { return a.degree_in(y_) >= 1 && unit(a.lead_coeff_in(y_)); }

  // Lowest y-degree entry whose leading coefficient is a local unit.
  std::size_t pivot_entry() const {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < n_; ++j)
      if (has_unit_lead(p_[j]) && (!best || p_[j].degree_in(y_) < p_[*best].degree_in(y_))) best = j;
    ensure(best.has_value(), "Horrocks lost its pivot entry");
    return *best;
  }

  void reduce_by_pivot() {
    const long deg = p_[0].degree_in(y_);
    for (std::size_t k = 1; k < n_; ++k) {
      if (p_[k].degree_in(y_) < deg) continue;
      PseudoDivision pd = pseudo_divmod(p_[k], p_[0], y_);
      Poly scale = Poly::constant(ring_, 1);
      if (pd.power > 0) {
        Poly lc = p_[0].lead_coeff_in(y_);
        note_factor(lc);
        scale = lc.pow(pd.power);
      }
      combine(k, scale, 0, -pd.quotient);
      ensure(p_[k] == pd.remainder, "pseudo-division bookkeeping mismatch");
    }
  }

  bool has_better_pivot(long deg) const {
    for (std::size_t k = 1; k < n_; ++k)
      if (unit(p_[k]) || (has_unit_lead(p_[k]) && p_[k].degree_in(y_) < deg)) return true;
    return false;
  }

  // Every other entry has y-degree < deg and a leading coefficient in m.
  // Build h in (p_0, p_j) of degree deg-1 with unit y^(deg-1) coefficient and
  // add it to a third entry.
  void lower_degree(long deg) {
    std::optional<std::size_t> j;
    long best_i = 0;
    for (std::size_t k = 1; k < n_; ++k)
      for (long i = 0; i <= p_[k].degree_in(y_); ++i)
        if (unit(p_[k].coeff_in(y_, i)) && (!j || i < best_i)) {
          j = k;
          best_i = i;
          break;
        }
    if (!j) fail(ErrorKind::NotUnimodularLocally, "no entry has a coefficient outside the maximal ideal");
    if (n_ < 3) fail(ErrorKind::RowTooShort, "degree reduction needs a row of length at least 3");
    std::size_t k = 0;
    while (k == 0 || k == *j) ++k;

    const Poly lc = p_[0].lead_coeff_in(y_);
    const Poly yv = Poly::variable(ring_, y_);
    const long s = p_[*j].degree_in(y_);
    Poly alpha(ring_);
    Poly beta = yv.pow(static_cast<unsigned>(deg - 1 - s));
    Poly h = beta * p_[*j];
    for (long t = 0;; ++t) {
      ensure(t <= s, "Horrocks degree reduction did not find a unit coefficient");
      Poly c = h.coeff_in(y_, deg - 1);
      if (unit(c)) break;
      h = lc * yv * h - c * p_[0];
      alpha = lc * yv * alpha - c;
      beta = lc * yv * beta;
    }
    M_.add_col_multiple(k, 0, alpha);
    M_.add_col_multiple(k, *j, beta);
    p_[k] += h;
  }

  void finish_with_unit(std::size_t j) {
    swap(0, j);
    const Poly u = p_[0];
    note_factor(u);
    for (std::size_t k = 1; k < n_; ++k) {
      if (p_[k].is_zero()) continue;
      combine(k, u, 0, -p_[k]);
      ensure(p_[k].is_zero(), "clearing against the unit entry failed");
    }
  }

  RingPtr ring_;
  std::size_t y_;
  Localization local_;
  std::size_t n_;
  PolyMatrix M_;
  std::vector<Poly> p_;
  std::vector<Poly> factors_;
};

}  // namespace

LocalSolution horrocks(const std::vector<Poly>& f, std::size_t y, const MaxIdeal& m, HorrocksTrace* trace) {
  if (f.empty()) fail(ErrorKind::ShapeError, "empty row");
  const RingPtr& ring = f.front().ring();
  for (const auto& e : f)
    if (!same_ring(e.ring(), ring)) fail(ErrorKind::RingMismatch, "row entries from different rings");
  bool monic = false;
  for (const auto& e : f) monic = monic || is_unit_monic_in(e, y);
  if (!monic) fail(ErrorKind::NoMonicEntry, "no entry is monic in " + ring->var(y));

  LocalSolution sol = HorrocksRun(f, y, m).run(trace);
  sol.row = f;

  const Localization local(BaseRing(ring, y), m);
  std::vector<Poly> image = row_times(f, sol.numerator);
  ensure(image[0] == sol.entry_den, "f * L does not start with the common denominator");
  for (std::size_t k = 1; k < image.size(); ++k) ensure(image[k].is_zero(), "f * L is not e1");
  ensure(local.is_unit(sol.entry_den) && local.is_unit(sol.denominator), "denominator lies in the maximal ideal");
  ensure(local.is_unit(sol.det_numerator), "det L is not a local unit");
  return sol;
}

}  // namespace quillen
