#include "quillen/local.hpp"

#include <algorithm>

#include "quillen/error.hpp"

namespace quillen {

namespace {

// Value of one term at a point, skipping variable `skip`; over ZZ with
// prime > 0 the value is taken mod p.
Coeff term_value(const RingDesc& ring, const Term& t, const std::vector<Coeff>& point, long prime, std::size_t skip) {
  if (ring.kind() == CoeffKind::Z) {
    mpz_class p(prime);
    mpz_class v = t.coeff.get_num() % p;
    for (std::size_t i = 0; i < ring.nvars() && v != 0; ++i) {
      if (!t.mon[i] || i == skip) continue;
      mpz_class base = point[i].get_num(), pw;
      mpz_powm_ui(pw.get_mpz_t(), base.get_mpz_t(), t.mon[i], p.get_mpz_t());
      v = (v * pw) % p;
    }
    return Coeff(v);
  }
  Coeff v = t.coeff;
  for (std::size_t i = 0; i < ring.nvars() && v != 0; ++i) {
    if (!t.mon[i] || i == skip) continue;
    if (ring.kind() == CoeffKind::Zp) {
      mpz_class pw, base = point[i].get_num(), p(ring.modulus());
      mpz_powm_ui(pw.get_mpz_t(), base.get_mpz_t(), t.mon[i], p.get_mpz_t());
      v = ring.normalize(v * Coeff(pw));
    } else {
      mpq_class pw;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), point[i].get_num_mpz_t(), t.mon[i]);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), point[i].get_den_mpz_t(), t.mon[i]);
      pw.canonicalize();
      v *= pw;
    }
  }
  return v;
}

// Value of f at a point, reduced into the residue field.
Coeff evaluate(const Poly& f, const std::vector<Coeff>& point, long prime) {
  const RingDesc& ring = *f.ring();
  Coeff acc(0);
  for (const auto& t : f.terms()) acc += term_value(ring, t, point, prime, ring.nvars());
  if (ring.kind() == CoeffKind::Z) {
    mpz_class r = acc.get_num() % prime;
    if (r < 0) r += prime;
    return Coeff(r);
  }
  return ring.normalize(acc);
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// Residue characteristics to try: the primes up to the budget over ZZ, a
// single 0 over a field.
std::vector<long> search_primes(const RingDesc& ring, const MaxIdealBudget& budget) {
  if (ring.kind() == CoeffKind::Z) return primes_up_to(budget.max_prime);
  return {0};
}

// All of F_p, or the box {0, 1, -1, ..., box, -box} over QQ.
std::vector<Coeff> coordinate_values(const RingDesc& ring, long prime, const MaxIdealBudget& budget) {
  std::vector<Coeff> values;
  const long p = ring.kind() == CoeffKind::Zp ? ring.modulus() : prime;
  if (p > 0) {
    for (long a = 0; a < p; ++a) values.emplace_back(a);
    return values;
  }
  values.emplace_back(0);
  for (long a = 1; a <= budget.box; ++a) {
    values.emplace_back(a);
    values.emplace_back(-a);
  }
  return values;
}

// Odometer over `values` for each of `dims` coordinates; calls visit until it
// returns true. Returns false if nothing matched.
template <class Visit>
bool enumerate(const std::vector<Coeff>& values, std::size_t dims, std::size_t& budget, Visit&& visit) {
  std::vector<std::size_t> idx(dims, 0);
  std::vector<Coeff> pt(dims);
  while (true) {
    if (budget == 0) return false;
    --budget;
    for (std::size_t i = 0; i < dims; ++i) pt[i] = values[idx[i]];
    if (visit(pt)) return true;
    std::size_t k = dims;
    while (k > 0 && idx[k - 1] + 1 == values.size()) idx[--k] = 0;
    if (k == 0) return false;
    ++idx[k - 1];
  }
}

// Reduction modulo a monic univariate polynomial; zero means no reduction.
Poly reduce_mod(const Poly& f, const Poly& modulus) {
  return modulus.is_zero() ? f : divmod_by_monic(f, modulus, 0).second;
}

// f mod m in k[t]/(modulus): each variable goes to its image.
Poly residue_poly(const Poly& f, const MaxIdeal& m) {
  const RingPtr& kt = m.modulus->ring();
  std::vector<std::vector<Poly>> powers(m.images.size());
  Poly out(kt);
  for (const auto& t : f.terms()) {
    Poly v = Poly::constant(kt, kt->normalize(t.coeff));
    for (std::size_t i = 0; i < m.images.size() && !v.is_zero(); ++i) {
      if (!t.mon[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(kt, 1));
      while (pw.size() <= t.mon[i]) pw.push_back(reduce_mod(pw.back() * m.images[i], *m.modulus));
      v = reduce_mod(v * pw[t.mon[i]], *m.modulus);
    }
    out += v;
  }
  return out;
}

// One variable named `name` over the residue field of the prime.
RingPtr residue_ring(const RingDesc& ring, long prime, const std::string& name) {
  if (ring.kind() == CoeffKind::Z) return make_ring(CoeffKind::Zp, {name}, prime);
  return make_ring(ring.kind(), {name}, ring.modulus());
}

// Images sending every variable to its coordinate except `var`, which goes to t.
std::vector<Poly> point_images(const RingPtr& kt, const std::vector<Coeff>& point, std::size_t var) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < point.size(); ++i)
    out.push_back(i == var ? Poly::variable(kt, 0) : Poly::constant(kt, kt->normalize(point[i])));
  return out;
}

// Univariate f in variable `var` of its ring, moved to the one-variable ring kt.
Poly to_univariate(const Poly& f, std::size_t var, const RingPtr& kt) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({Monomial::var(0, t.mon[var]), t.coeff});
  return Poly::from_terms(kt, std::move(terms));
}

Poly from_univariate(const Poly& u, std::size_t var, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : u.terms()) terms.push_back({Monomial::var(var, t.mon[0]), t.coeff});
  return Poly::from_terms(ring, std::move(terms));
}

Poly derivative(const Poly& u) {
  std::vector<Term> terms;
  for (const auto& t : u.terms())
    if (t.mon[0] > 0) terms.push_back({Monomial::var(0, t.mon[0] - 1), t.coeff * t.mon[0]});
  return Poly::from_terms(u.ring(), std::move(terms));
}

// u(t) = v(t^p) over F_p gives v, since a^p = a on F_p.
Poly pth_root(const Poly& u) {
  const long p = u.ring()->modulus();
  std::vector<Term> terms;
  for (const auto& t : u.terms()) {
    ensure(t.mon[0] % p == 0, "polynomial is not a p-th power");
    terms.push_back({Monomial::var(0, t.mon[0] / p), t.coeff});
  }
  return Poly::from_terms(u.ring(), std::move(terms));
}

// Product of the distinct monic irreducible factors of u.
Poly radical(const Poly& u) {
  const RingPtr& kt = u.ring();
  if (u.degree_in(0) < 1) return Poly::constant(kt, 1);
  const Poly d = derivative(u);
  if (d.is_zero()) return radical(pth_root(u));
  const Poly g = univariate_gcd(u, d);
  const Poly r = univariate_gcd(divmod_by_monic(u, g, 0).first, Poly(kt));
  // Left over: factors whose multiplicity is a multiple of the characteristic.
  Poly rest = g;
  for (Poly c = univariate_gcd(rest, r); c.degree_in(0) >= 1; c = univariate_gcd(rest, r))
    rest = divmod_by_monic(rest, c, 0).first;
  if (rest.degree_in(0) < 1) return r;
  return univariate_gcd(r * radical(pth_root(rest)), Poly(kt));
}

constexpr std::size_t kMaxForms = 64;

bool is_proper(const RingPtr& ring, const std::vector<Poly>& gens) {
  return gens.empty() || !one_certificate({ring, gens});
}

// Generator of I ∩ k[x_var], if nonzero.
std::optional<Poly> eliminant(const RingPtr& ring, const std::vector<Poly>& gens, std::size_t var) {
  if (gens.empty()) return std::nullopt;
  std::vector<std::string> names;
  std::vector<int> to, from;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (i != var) names.push_back(ring->var(i));
  names.push_back(ring->var(var));
  for (std::size_t i = 0, k = 0; i < ring->nvars(); ++i) to.push_back(i == var ? static_cast<int>(names.size() - 1) : static_cast<int>(k++));
  from.assign(ring->nvars(), 0);
  for (std::size_t i = 0; i < ring->nvars(); ++i) from[to[i]] = static_cast<int>(i);
  const RingPtr P = with_vars(*ring, names);
  std::vector<Poly> moved;
  for (const auto& g : gens) moved.push_back(map_vars(g, P, to));
  GroebnerOptions lex;
  lex.order = MonomialOrder::Lex;
  for (const auto& g : groebner({P, moved}, lex).gens) {
    bool only_last = true;
    for (std::size_t i = 0; i + 1 < P->nvars(); ++i) only_last = only_last && !g.uses_var(i);
    if (only_last && !g.is_zero()) return map_vars(g, ring, from);
  }
  return std::nullopt;
}

// Images of the variables under a primitive element t = sum w_i x_i of the
// radical zero-dimensional ideal, when the lex basis has shape form.
std::optional<std::pair<Poly, std::vector<Poly>>> shape_form(const RingPtr& ring, const std::vector<Poly>& gens,
                                                             const std::vector<Coeff>& weights, const RingPtr& kt) {
  const std::size_t n = ring->nvars();
  std::vector<std::string> names = ring->vars();
  names.push_back("_t");
  while (ring->index_of(names.back()) >= 0) names.back() += "t";
  const RingPtr T = with_vars(*ring, names);
  std::vector<int> embed;
  for (std::size_t i = 0; i < n; ++i) embed.push_back(static_cast<int>(i));
  std::vector<Poly> moved;
  for (const auto& g : gens) moved.push_back(map_vars(g, T, embed));
  Poly form = Poly::variable(T, n);
  for (std::size_t i = 0; i < n; ++i) form -= Poly::variable(T, i).scaled(T->normalize(weights[i]));
  moved.push_back(form);
  GroebnerOptions lex;
  lex.order = MonomialOrder::Lex;
  const GroebnerBasis gb = groebner({T, moved}, lex);
  std::optional<Poly> h;
  std::vector<std::optional<Poly>> images(n);
  for (const auto& g : gb.gens) {
    const Term lt = g.leading_term(MonomialOrder::Lex);
    const Poly monic = g.scaled(T->inverse(lt.coeff));
    Poly tail = monic - Poly::term(T, Coeff(1), lt.mon);
    bool tail_in_t = true;
    for (std::size_t i = 0; i < n; ++i) tail_in_t = tail_in_t && !tail.uses_var(i);
    if (!tail_in_t) return std::nullopt;
    if (lt.mon == Monomial::var(n, lt.mon[n]) && !h) {
      h = to_univariate(monic, n, kt);
      continue;
    }
    std::size_t i = 0;
    while (i < n && lt.mon != Monomial::var(i, 1)) ++i;
    if (i == n) return std::nullopt;
    images[i] = to_univariate(-tail, n, kt);
  }
  if (!h || h->degree_in(0) < 1) return std::nullopt;
  std::vector<Poly> out;
  for (auto& im : images) {
    if (!im) return std::nullopt;
    out.push_back(std::move(*im));
  }
  return std::make_pair(std::move(*h), std::move(out));
}

}  // namespace

Coeff MaxIdeal::residue(const Poly& f) const {
  if (!same_ring(f.ring(), ring)) fail(ErrorKind::RingMismatch, "residue across rings");
  ensure(is_point(), "residues of a univariate ideal are not coefficients");
  return evaluate(f, point, prime);
}

std::vector<std::string> MaxIdeal::gen_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(to_string(g));
  return out;
}

MaxIdeal make_point_ideal(const RingPtr& ring, long prime, std::vector<Coeff> point) {
  ensure(point.size() == ring->nvars(), "point dimension does not match the ring");
  ensure((ring->kind() == CoeffKind::Z) == (prime > 0), "prime must be given exactly over ZZ");
  std::vector<Poly> gens;
  if (prime > 0) gens.push_back(Poly::constant(ring, prime));
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    gens.push_back(Poly::variable(ring, i) - Poly::constant(ring, point[i]));
  GroebnerBasis gb = groebner({ring, gens});
  ensure(!gb.contains_unit(), "point ideal is the unit ideal");
  return MaxIdeal{ring, gb.gens, prime, std::move(point), std::nullopt, {}};
}

MaxIdeal make_univariate_ideal(const RingPtr& ring, long prime, std::size_t var, const Poly& h,
                               std::vector<Coeff> point) {
  ensure(var < ring->nvars(), "variable out of range");
  if (point.empty()) point.assign(ring->nvars(), Coeff(0));
  ensure(point.size() == ring->nvars(), "point dimension does not match the ring");
  return make_algebraic_ideal(ring, prime, h, point_images(h.ring(), point, var));
}

MaxIdeal make_algebraic_ideal(const RingPtr& ring, long prime, const Poly& h, std::vector<Poly> images) {
  ensure((ring->kind() == CoeffKind::Z) == (prime > 0), "prime must be given exactly over ZZ");
  ensure(h.ring()->nvars() == 1 && h.degree_in(0) >= 1, "modulus must be a nonconstant univariate polynomial");
  ensure(images.size() == ring->nvars(), "one image per variable");
  ensure(ring->nvars() < RingDesc::kMaxVars, "no spare variable for the residue generator");
  const Poly monic = univariate_gcd(h, Poly(h.ring()));
  for (auto& im : images) im = reduce_mod(im, monic);

  // Kernel of A -> k[t]/(h): eliminate t from (h(t), x_i - image_i(t)).
  std::vector<std::string> names{"_t"};
  for (const auto& v : ring->vars()) names.push_back(v);
  while (ring->index_of(names.front()) >= 0) names.front() += "t";
  const RingPtr T = with_vars(*ring, names);
  auto lift = [&](const Poly& u) {
    std::vector<Term> terms;
    for (const auto& t : u.terms()) terms.push_back({Monomial::var(0, t.mon[0]), t.coeff});
    return Poly::from_terms(T, std::move(terms));
  };
  std::vector<Poly> gens;
  if (prime > 0) gens.push_back(Poly::constant(T, prime));
  gens.push_back(lift(monic));
  for (std::size_t i = 0; i < images.size(); ++i) gens.push_back(Poly::variable(T, i + 1) - lift(images[i]));
  GroebnerOptions lex;
  lex.order = MonomialOrder::Lex;
  std::vector<int> back{-1};
  for (std::size_t i = 0; i < ring->nvars(); ++i) back.push_back(static_cast<int>(i));
  std::vector<Poly> kernel;
  for (const auto& g : groebner({T, gens}, lex).gens)
    if (!g.uses_var(0)) kernel.push_back(map_vars(g, ring, back));
  GroebnerBasis gb = groebner({ring, kernel});
  ensure(!gb.contains_unit(), "univariate ideal is the unit ideal");
  MaxIdeal m{ring, gb.gens, prime, {}, monic, std::move(images)};
  return m;
}

Poly univariate_gcd(Poly a, Poly b) {
  ensure(a.ring()->is_field() && a.ring()->nvars() == 1, "univariate gcd needs one variable over a field");
  const RingDesc& ring = *a.ring();
  auto make_monic = [&](const Poly& p) { return p.scaled(ring.inverse(p.leading_term().coeff)); };
  while (!b.is_zero()) {
    b = make_monic(b);
    Poly r = divmod_by_monic(a, b, 0).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

std::optional<MaxIdeal> univariate_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget) {
  const RingPtr& ring = ideal.ring;
  if (ring->nvars() == 0) return std::nullopt;
  std::vector<std::size_t> used;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (std::any_of(ideal.generators.begin(), ideal.generators.end(), [&](const Poly& g) { return g.uses_var(v); }))
      used.push_back(v);
  if (used.empty() || used.size() > budget.max_search_vars) return std::nullopt;

  std::size_t points_left = budget.max_points;
  std::optional<MaxIdeal> found;
  // Every used variable but `var` is fixed at a point; the generators then
  // share a nonconstant factor in `var`.
  auto try_prime = [&](long prime, const std::vector<Coeff>& values) {
    for (const std::size_t var : used) {
      std::vector<std::size_t> others;
      for (const std::size_t v : used)
        if (v != var) others.push_back(v);
      const bool hit = enumerate(values, others.size(), points_left, [&](const std::vector<Coeff>& pt) {
        std::vector<Coeff> full(ring->nvars(), Coeff(0));
        for (std::size_t i = 0; i < others.size(); ++i) full[others[i]] = pt[i];
        const RingPtr kt = residue_ring(*ring, prime, ring->var(var));
        const MaxIdeal view{ring, {}, prime, {}, Poly(kt), point_images(kt, full, var)};
        Poly g(kt);
        for (const auto& gen : ideal.generators) g = univariate_gcd(g, residue_poly(gen, view));
        if (g.degree_in(0) < 1) return false;
        found = make_univariate_ideal(ring, prime, var, g, std::move(full));
        return true;
      });
      if (hit) return true;
    }
    return false;
  };

  for (long p : search_primes(*ring, budget))
    if (try_prime(p, coordinate_values(*ring, p, budget))) return found;
  return std::nullopt;
}

std::optional<MaxIdeal> algebraic_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget) {
  const RingPtr& ring = ideal.ring;
  const std::size_t n = ring->nvars();
  if (n == 0 || n >= RingDesc::kMaxVars) return std::nullopt;
  for (long p : search_primes(*ring, budget)) {
    const RingPtr F = ring->kind() == CoeffKind::Z ? make_ring(CoeffKind::Zp, ring->vars(), p) : ring;
    std::vector<Poly> gens;
    for (const auto& g : ideal.generators) {
      Poly r = Poly::from_terms(F, g.terms());
      if (!r.is_zero()) gens.push_back(std::move(r));
    }
    if (!is_proper(F, gens)) continue;
    // Fix the free coordinates, then make the ideal radical.
    std::vector<Poly> radical_parts;
    bool zero_dimensional = true;
    const std::vector<Coeff> values = coordinate_values(*F, 0, budget);
    for (std::size_t i = 0; i < n && zero_dimensional; ++i) {
      std::optional<Poly> e = eliminant(F, gens, i);
      if (!e) {
        for (const auto& a : values) {
          std::vector<Poly> trial = gens;
          trial.push_back(Poly::variable(F, i) - Poly::constant(F, a));
          if (is_proper(F, trial)) {
            gens = std::move(trial);
            e = gens.back();
            break;
          }
        }
      }
      if (!e) zero_dimensional = false;
      else radical_parts.push_back(*e);
    }
    if (!zero_dimensional) continue;
    const RingPtr kt = residue_ring(*ring, p, "t");
    for (std::size_t i = 0; i < n; ++i)
      gens.push_back(from_univariate(radical(to_univariate(radical_parts[i], i, kt)), i, F));
    // Linear forms with small weights, at most kMaxForms of them.
    const std::vector<Coeff> small(values.begin(), values.begin() + std::min<std::size_t>(values.size(), 5));
    std::size_t forms_left = kMaxForms;
    std::optional<MaxIdeal> found;
    enumerate(small, n, forms_left, [&](const std::vector<Coeff>& weights) {
      if (std::all_of(weights.begin(), weights.end(), [](const Coeff& w) { return w == 0; })) return false;
      auto shape = shape_form(F, gens, weights, kt);
      if (!shape) return false;
      found = make_algebraic_ideal(ring, p, shape->first, std::move(shape->second));
      return true;
    });
    if (found) {
      for (const auto& g : ideal.generators) ensure(in_max_ideal(g, *found), "algebraic point misses a generator");
      return found;
    }
  }
  return std::nullopt;
}

MaxIdeal search_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget) {
  const RingPtr& ring = ideal.ring;
  std::vector<std::size_t> used;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (std::any_of(ideal.generators.begin(), ideal.generators.end(), [&](const Poly& g) { return g.uses_var(v); }))
      used.push_back(v);
  if (used.size() > budget.max_search_vars)
    fail(ErrorKind::SearchExhausted, "ideal involves " + std::to_string(used.size()) +
                                         " variables; the point search handles at most " +
                                         std::to_string(budget.max_search_vars));

  std::size_t points_left = budget.max_points;
  std::vector<Coeff> found;
  auto try_prime = [&](long prime, const std::vector<Coeff>& values) {
    return enumerate(values, used.size(), points_left, [&](const std::vector<Coeff>& pt) {
      std::vector<Coeff> full(ring->nvars(), Coeff(0));
      for (std::size_t i = 0; i < used.size(); ++i) full[used[i]] = pt[i];
      for (const auto& g : ideal.generators)
        if (evaluate(g, full, prime) != 0) return false;
      found = std::move(full);
      return true;
    });
  };

  for (long p : search_primes(*ring, budget))
    if (try_prime(p, coordinate_values(*ring, p, budget))) return make_point_ideal(ring, p, std::move(found));
  fail(ErrorKind::SearchExhausted,
       "no maximal ideal in linear-point form found within the search budget; raise --budget");
}

MaxIdeal get_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget) {
  if (one_certificate(ideal)) fail(ErrorKind::NotProper, "the ideal contains 1");
  MaxIdeal m = search_max_ideal(ideal, budget);
  for (const auto& g : ideal.generators) ensure(in_max_ideal(g, m), "maximal ideal misses a generator");
  return m;
}

bool in_max_ideal(const Poly& f, const MaxIdeal& m) {
  if (m.is_point()) return m.residue(f) == 0;
  if (!same_ring(f.ring(), m.ring)) fail(ErrorKind::RingMismatch, "membership across rings");
  return divmod_by_monic(residue_poly(f, m), *m.modulus, 0).second.is_zero();
}

BaseRing::BaseRing(RingPtr total, std::size_t y) : total_(std::move(total)), y_(y) {
  ensure(y_ < total_->nvars(), "eliminated variable out of range");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < total_->nvars(); ++i) {
    if (i == y_) {
      total_to_base_.push_back(-1);
      continue;
    }
    total_to_base_.push_back(static_cast<int>(vars.size()));
    base_to_total_.push_back(static_cast<int>(i));
    vars.push_back(total_->var(i));
  }
  base_ = with_vars(*total_, std::move(vars));
}

Poly BaseRing::to_base(const Poly& f) const { return map_vars(f, base_, total_to_base_); }

Poly BaseRing::to_total(const Poly& a) const { return map_vars(a, total_, base_to_total_); }

Localization::Localization(BaseRing base, MaxIdeal m) : base_(std::move(base)), m_(std::move(m)) {
  if (!same_ring(base_.base(), m_.ring)) fail(ErrorKind::RingMismatch, "maximal ideal lives in another ring");
}

bool Localization::is_unit(const Poly& f) const {
  if (f.is_zero() || f.uses_var(base_.y())) return false;
  const Poly a = base_.to_base(f);
  if (m_.is_point()) return !in_max_ideal(a, m_);
  Poly g = univariate_gcd(residue_poly(a, m_), *m_.modulus);
  if (g.degree_in(0) < 1) return true;
  if (g.degree_in(0) == m_.modulus->degree_in(0)) return false;
  throw ModulusSplit{std::move(g)};
}

bool Localization::in_ideal(const Poly& f) const { return in_max_ideal(base_.to_base(f), m_); }

LocalElem Localization::make(const Poly& num, const Poly& den) const {
  if (!is_unit(den)) fail(ErrorKind::NotLocalUnit, to_string(den) + " is not a unit locally");
  return {num, base_.to_base(den)};
}

LocalElem Localization::invert(const Poly& u) const { return make(Poly::constant(base_.total(), 1), u); }

LocalElem Localization::add(const LocalElem& a, const LocalElem& b) const {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * base_.to_total(b.den) + b.num * base_.to_total(a.den), a.den * b.den};
}

LocalElem Localization::mul(const LocalElem& a, const LocalElem& b) const {
  return {a.num * b.num, a.den * b.den};
}

LocalElem local_invert(const Poly& u, const MaxIdeal& m) {
  if (!same_ring(u.ring(), m.ring)) fail(ErrorKind::RingMismatch, "local inverse across rings");
  if (in_max_ideal(u, m)) fail(ErrorKind::NotLocalUnit, to_string(u) + " lies in the maximal ideal");
  return {Poly::constant(m.ring, 1), u};
}

std::string to_string(const LocalElem& e) {
  // den may live in the base ring while num lives in the total ring; compare
  // only when both share a ring.
  if (e.den.is_one()) return to_string(e.num);
  if (same_ring(e.num.ring(), e.den.ring())) {
    if (auto q = exact_divide(e.num, e.den)) return to_string(*q);
  }
  if (e.num.is_zero()) return "0";
  auto wrap = [](const Poly& p) {
    std::string s = to_string(p);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(e.num) + "/" + wrap(e.den);
}

}  // namespace quillen
