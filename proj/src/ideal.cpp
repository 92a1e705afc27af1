#include "quillen/ideal.hpp"

#include <algorithm>
#include <set>

#include "quillen/error.hpp"

namespace quillen {

namespace {

struct Element {
  Poly poly;
  std::vector<Poly> cof;
  Term lead;
  std::uint64_t sugar;
  bool alive = true;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

// Basis under construction. An element whose leading term is divided by a
// newer one is retired, reduced and added again; pairs with retired
// elements are dropped.
class Builder {
 public:
  Builder(const IdealDesc& ideal, const GroebnerOptions& opts)
      : ring_(ideal.ring), input_(ideal.generators), opts_(opts), field_(ideal.ring->is_field()) {}

  GroebnerBasis run() {
    for (std::size_t k = 0; k < input_.size(); ++k) {
      if (input_[k].is_zero()) continue;
      std::vector<Poly> cof(input_.size(), Poly(ring_));
      cof[k] = Poly::constant(ring_, 1);
      if (insert({input_[k], std::move(cof), {}, input_[k].total_degree()})) return finish(false);
    }
    while (!pending_.empty()) {
      Pair p = pop_pair();
      if (!basis_[p.i].alive || !basis_[p.j].alive) continue;
      if (++processed_ > opts_.max_pairs)
        fail(ErrorKind::ResourceExceeded, "Groebner pair limit " + std::to_string(opts_.max_pairs) + " exceeded");
      if (field_ && skip_by_criteria(p)) continue;
      for (auto& e : pair_polys(p))
        if (insert(std::move(e))) return finish(false);
    }
    return finish(true);
  }

 private:
  bool reduces(const Element& g, const Term& t) const {
    return g.lead.mon.divides(t.mon) && ring_->divides(g.lead.coeff, t.coeff);
  }

  // Subtract c*m*g from e, cofactors included.
  void subtract(Element& e, const Element& g, const Coeff& c, const Monomial& m) const {
    e.poly -= g.poly.mul_term(c, m);
    for (std::size_t k = 0; k < e.cof.size(); ++k)
      if (!g.cof[k].is_zero()) e.cof[k] -= g.cof[k].mul_term(c, m);
    e.sugar = std::max(e.sugar, g.sugar + m.degree());
  }

  // Best reducer of t in pool (index skip excluded). Exact divisors come
  // first; over ZZ a coefficient no lead divides is still shrunk by
  // truncated division, which keeps coefficients small.
  const Element* reducer(const Term& t, const std::vector<Element>& pool, std::size_t skip, Coeff& q) const {
    const Element* red = nullptr;
    mpz_class best_rem;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const Element& g = pool[k];
      if (k == skip || !g.alive || !g.lead.mon.divides(t.mon)) continue;
      if (ring_->divides(g.lead.coeff, t.coeff)) {
        if (red && best_rem == 0 && compare(g.lead.mon, red->lead.mon, opts_.order) >= 0) continue;
        red = &g;
        q = ring_->exact_quotient(t.coeff, g.lead.coeff);
        best_rem = 0;
        continue;
      }
      if (field_ || (red && best_rem == 0)) continue;
      mpz_class quo, rem;
      mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), t.coeff.get_num_mpz_t(), g.lead.coeff.get_num_mpz_t());
      if (quo == 0 || (red && abs(rem) >= abs(best_rem))) continue;
      red = &g;
      q = Coeff(quo);
      best_rem = rem;
    }
    return red;
  }

  void top_reduce(Element& e) const {
    Coeff q;
    while (!e.poly.is_zero()) {
      const Term lt = e.poly.leading_term(opts_.order);
      const Element* red = reducer(lt, basis_, basis_.size(), q);
      if (!red) return;
      subtract(e, *red, q, lt.mon / red->lead.mon);
    }
  }

  void normalize(Element& e) const {
    Coeff lc = e.poly.leading_term(opts_.order).coeff;
    Coeff scale = field_ ? ring_->inverse(lc) : Coeff(lc < 0 ? -1 : 1);
    if (scale != 1) {
      e.poly = e.poly.scaled(scale);
      for (auto& c : e.cof) c = c.scaled(scale);
    }
    e.lead = e.poly.leading_term(opts_.order);
  }

  // Reduces e, adds it when nonzero and settles the retired elements.
  // Returns true when the caller should stop early on a unit.
  bool insert(Element e) {
    std::vector<Element> queue;
    queue.push_back(std::move(e));
    while (!queue.empty()) {
      Element next = std::move(queue.back());
      queue.pop_back();
      top_reduce(next);
      if (next.poly.is_zero()) continue;
      if (add(std::move(next), queue)) return true;
    }
    return false;
  }

  bool add(Element e, std::vector<Element>& retired) {
    normalize(e);
    e.alive = true;
    const std::size_t idx = basis_.size();
    basis_.push_back(std::move(e));
    if (opts_.stop_on_unit && basis_.back().poly.is_unit()) return true;
    for (std::size_t i = 0; i < idx; ++i) {
      if (!basis_[i].alive) continue;
      if (reduces(basis_[idx], basis_[i].lead)) {
        basis_[i].alive = false;
        retired.push_back(basis_[i]);
        continue;
      }
      const Element& g = basis_[i];
      const Element& ne = basis_[idx];
      Monomial l = g.lead.mon.lcm(ne.lead.mon);
      std::uint64_t sugar = std::max(g.sugar + (l.degree() - g.lead.mon.degree()),
                                     ne.sugar + (l.degree() - ne.lead.mon.degree()));
      pending_.push_back({i, idx, l, sugar});
      pending_set_.insert({i, idx});
    }
    return false;
  }

  Pair pop_pair() {
    auto best = pending_.begin();
    for (auto it = pending_.begin(); it != pending_.end(); ++it) {
      if (it->sugar != best->sugar) {
        if (it->sugar < best->sugar) best = it;
        continue;
      }
      int c = compare(it->lcm, best->lcm, opts_.order);
      if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
    }
    Pair p = *best;
    pending_.erase(best);
    pending_set_.erase({p.i, p.j});
    return p;
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_set_.count({std::min(a, b), std::max(a, b)}) != 0;
  }

  // Product and chain criteria; valid over fields only.
  bool skip_by_criteria(const Pair& p) const {
    const auto& a = basis_[p.i].lead.mon;
    const auto& b = basis_[p.j].lead.mon;
    if (a.coprime(b)) return true;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j || !basis_[k].alive) continue;
      if (basis_[k].lead.mon.divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k)) return true;
    }
    return false;
  }

  Element combine(const Element& f, const Coeff& cf, const Element& g, const Coeff& cg, const Monomial& l,
                  std::uint64_t sugar) const {
    Monomial mf = l / f.lead.mon, mg = l / g.lead.mon;
    Element e{f.poly.mul_term(cf, mf), {}, {}, sugar};
    e.poly += g.poly.mul_term(cg, mg);
    e.cof.reserve(f.cof.size());
    for (std::size_t k = 0; k < f.cof.size(); ++k)
      e.cof.push_back(f.cof[k].mul_term(cf, mf) + g.cof[k].mul_term(cg, mg));
    return e;
  }

  // S-polynomial, plus the G-polynomial over ZZ when neither leading
  // coefficient divides the other.
  std::vector<Element> pair_polys(const Pair& p) const {
    const Element& f = basis_[p.i];
    const Element& g = basis_[p.j];
    std::vector<Element> out;
    if (field_) {
      out.push_back(combine(f, Coeff(1), g, Coeff(-1), p.lcm, p.sugar));
      return out;
    }
    mpz_class a = f.lead.coeff.get_num(), b = g.lead.coeff.get_num();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    out.push_back(combine(f, Coeff(mpz_class(l / a)), g, Coeff(mpz_class(-(l / b))), p.lcm, p.sugar));
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) && !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      auto [gcd, s, t] = ext_gcd(a, b);
      out.push_back(combine(f, Coeff(s), g, Coeff(t), p.lcm, p.sugar));
    }
    return out;
  }

  GroebnerBasis finish(bool complete) {
    GroebnerBasis gb;
    gb.ring = ring_;
    gb.order = opts_.order;
    gb.input = input_;
    gb.pairs_processed = processed_;
    std::vector<Element> kept;
    if (!complete) {
      // Early exit on a unit: the unit alone generates everything.
      kept.push_back(basis_.back());
    } else {
      std::vector<Element> alive;
      for (const auto& e : basis_)
        if (e.alive) alive.push_back(e);
      for (std::size_t i = 0; i < alive.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < alive.size() && !redundant; ++j) {
          if (i == j || !reduces(alive[j], alive[i].lead)) continue;
          // Equal leading terms: keep the earlier element.
          bool equal = alive[j].lead.mon == alive[i].lead.mon && alive[j].lead.coeff == alive[i].lead.coeff;
          redundant = !equal || j < i;
        }
        if (!redundant) kept.push_back(alive[i]);
      }
      tail_reduce(kept);
    }
    std::sort(kept.begin(), kept.end(),
              [&](const Element& x, const Element& y) { return compare(x.lead.mon, y.lead.mon, opts_.order) < 0; });
    for (auto& e : kept) {
      gb.gens.push_back(std::move(e.poly));
      gb.cofactors.push_back(std::move(e.cof));
    }
    return gb;
  }

  void tail_reduce(std::vector<Element>& elems) const {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      Element& e = elems[i];
      Poly done(ring_);
      Element rest = e;
      rest.poly -= Poly::term(ring_, e.lead.coeff, e.lead.mon);
      done = Poly::term(ring_, e.lead.coeff, e.lead.mon);
      Coeff q;
      while (!rest.poly.is_zero()) {
        Term lt = rest.poly.leading_term(opts_.order);
        const Element* red = reducer(lt, elems, i, q);
        if (!red) {
          Poly t = Poly::term(ring_, lt.coeff, lt.mon);
          done += t;
          rest.poly -= t;
          continue;
        }
        subtract(rest, *red, q, lt.mon / red->lead.mon);
      }
      e.poly = std::move(done);
      e.cof = std::move(rest.cof);
    }
  }

  RingPtr ring_;
  std::vector<Poly> input_;
  GroebnerOptions opts_;
  bool field_;
  std::vector<Element> basis_;
  std::vector<Pair> pending_;
  std::set<std::pair<std::size_t, std::size_t>> pending_set_;
  std::size_t processed_ = 0;
};

}  // namespace

bool GroebnerBasis::contains_unit() const {
  return std::any_of(gens.begin(), gens.end(), [](const Poly& g) { return g.is_unit(); });
}

GroebnerBasis groebner(const IdealDesc& ideal, const GroebnerOptions& options) {
  for (const auto& g : ideal.generators)
    if (!same_ring(g.ring(), ideal.ring)) fail(ErrorKind::RingMismatch, "ideal generator from another ring");
  return Builder(ideal, options).run();
}

Reduction reduce(const Poly& f, const GroebnerBasis& basis) {
  if (!same_ring(f.ring(), basis.ring)) fail(ErrorKind::RingMismatch, "reducing across rings");
  const RingDesc& ring = *basis.ring;
  std::vector<Term> leads;
  for (const auto& g : basis.gens) leads.push_back(g.leading_term(basis.order));
  Reduction out{Poly(basis.ring), std::vector<Poly>(basis.gens.size(), Poly(basis.ring))};
  Poly p = f;
  while (!p.is_zero()) {
    Term lt = p.leading_term(basis.order);
    std::size_t which = leads.size();
    for (std::size_t i = 0; i < leads.size() && which == leads.size(); ++i)
      if (leads[i].mon.divides(lt.mon) && ring.divides(leads[i].coeff, lt.coeff)) which = i;
    if (which == leads.size()) {
      Poly t = Poly::term(basis.ring, lt.coeff, lt.mon);
      out.remainder += t;
      p -= t;
      continue;
    }
    Coeff c = ring.exact_quotient(lt.coeff, leads[which].coeff);
    Monomial m = lt.mon / leads[which].mon;
    p -= basis.gens[which].mul_term(c, m);
    out.cofactors[which] += Poly::term(basis.ring, c, m);
  }
  return out;
}

bool ideal_contains(const GroebnerBasis& basis, const Poly& f) { return reduce(f, basis).remainder.is_zero(); }

std::optional<std::vector<Poly>> one_certificate(const IdealDesc& ideal, const GroebnerOptions& options) {
  GroebnerOptions opts = options;
  opts.stop_on_unit = true;
  GroebnerBasis gb = groebner(ideal, opts);
  for (std::size_t i = 0; i < gb.gens.size(); ++i) {
    if (!gb.gens[i].is_unit()) continue;
    Coeff inv = ideal.ring->inverse(gb.gens[i].constant_term());
    std::vector<Poly> cert;
    Poly check(ideal.ring);
    for (std::size_t k = 0; k < ideal.generators.size(); ++k) {
      cert.push_back(gb.cofactors[i][k].scaled(inv));
      check += cert.back() * ideal.generators[k];
    }
    ensure(check.is_one(), "unit certificate does not expand to 1");
    return cert;
  }
  return std::nullopt;
}

bool is_unimodular(const PolyMatrix& m) {
  if (m.rows() > m.cols()) fail(ErrorKind::ShapeError, "unimodularity needs rows <= cols");
  return one_certificate({m.ring(), minors(m, m.rows())}).has_value();
}

PolyMatrix right_inverse(const PolyMatrix& m) {
  if (m.rows() > m.cols()) fail(ErrorKind::ShapeError, "right inverse needs rows <= cols");
  const std::size_t r = m.rows();
  auto col_sets = subsets(m.cols(), r);
  std::vector<std::size_t> all_rows(r);
  for (std::size_t i = 0; i < r; ++i) all_rows[i] = i;
  std::vector<Poly> mins;
  for (const auto& cs : col_sets) mins.push_back(determinant(m.submatrix(all_rows, cs)));
  auto cert = one_certificate({m.ring(), mins});
  if (!cert) fail(ErrorKind::NotUnimodular, "maximal minors do not generate the unit ideal");
  PolyMatrix x(m.ring(), m.cols(), r);
  for (std::size_t s = 0; s < col_sets.size(); ++s) {
    if ((*cert)[s].is_zero()) continue;
    PolyMatrix adj = adjugate(m.submatrix(all_rows, col_sets[s]));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) x(col_sets[s][a], b) += (*cert)[s] * adj(a, b);
  }
  ensure(m * x == PolyMatrix::identity(m.ring(), r), "right inverse check failed");
  return x;
}

IdealDesc fitting_ideal(const PolyMatrix& presentation, std::size_t k) {
  const std::size_t n = presentation.rows();
  if (k >= n) return {presentation.ring(), {Poly::constant(presentation.ring(), 1)}};
  const std::size_t size = n - k;
  if (size > std::min(n, presentation.cols())) return {presentation.ring(), {}};
  return {presentation.ring(), minors(presentation, size)};
}

bool is_zero_ideal(const IdealDesc& ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(), [](const Poly& g) { return g.is_zero(); });
}

bool is_unit_ideal(const IdealDesc& ideal) { return one_certificate(ideal).has_value(); }

}  // namespace quillen
