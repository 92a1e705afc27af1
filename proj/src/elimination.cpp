#include "quillen/elimination.hpp"

#include <algorithm>
#include <tuple>

#include "quillen/error.hpp"

namespace quillen {

namespace {

std::vector<Coeff> box_values(long bound) {
  std::vector<Coeff> out{Coeff(0)};
  for (long a = 1; a <= bound; ++a) {
    out.emplace_back(a);
    out.emplace_back(-a);
  }
  return out;
}

// x_i -> x_i + shift[i] * x_last for i < last.
Substitution linear_shift(const RingPtr& ring, std::size_t last, const std::vector<Coeff>& shift) {
  std::vector<Poly> fwd, inv;
  const Poly xl = Poly::variable(ring, last);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Poly xi = Poly::variable(ring, i);
    if (i < last && shift[i] != 0) {
      fwd.push_back(xi + xl.scaled(shift[i]));
      inv.push_back(xi - xl.scaled(shift[i]));
    } else {
      fwd.push_back(xi);
      inv.push_back(xi);
    }
  }
  return Substitution(ring, std::move(fwd), std::move(inv));
}

// x_i -> x_i + x_last^(r^(i+1)) for i < last.
Substitution nagata_shift(const RingPtr& ring, std::size_t last, unsigned r) {
  std::vector<Poly> fwd, inv;
  const Poly xl = Poly::variable(ring, last);
  unsigned e = 1;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Poly xi = Poly::variable(ring, i);
    if (i < last) {
      e *= r;
      fwd.push_back(xi + xl.pow(e));
      inv.push_back(xi - xl.pow(e));
    } else {
      fwd.push_back(xi);
      inv.push_back(xi);
    }
  }
  return Substitution(ring, std::move(fwd), std::move(inv));
}

// All shift vectors over box values for coordinates 0..last-1, zero vector first.
std::vector<std::vector<Coeff>> shift_vectors(std::size_t nvars, std::size_t last, long bound) {
  const std::vector<Coeff> values = box_values(bound);
  std::vector<std::vector<Coeff>> out;
  std::vector<std::size_t> idx(last, 0);
  while (true) {
    std::vector<Coeff> v(nvars, Coeff(0));
    for (std::size_t i = 0; i < last; ++i) v[i] = values[idx[i]];
    out.push_back(std::move(v));
    std::size_t k = last;
    while (k > 0 && idx[k - 1] + 1 == values.size()) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return out;
}

// Monomials of degree <= d in variables 0..nactive-1, by degree then grevlex.
std::vector<Monomial> small_monomials(std::size_t nactive, unsigned d) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> frontier{Monomial()};
  for (unsigned deg = 1; deg <= d; ++deg) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (std::size_t v = 0; v < nactive; ++v) {
        Monomial n = m * Monomial::var(v);
        if (std::find(next.begin(), next.end(), n) == next.end()) next.push_back(n);
      }
    std::sort(next.begin(), next.end(),
              [](const Monomial& a, const Monomial& b) { return compare(a, b, MonomialOrder::Grevlex) > 0; });
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Total degree, coefficient height, term count.
std::tuple<std::uint64_t, mpz_class, std::size_t> size_of(const Poly& p) {
  mpz_class height = 0;
  for (const auto& t : p.terms()) height += abs(t.coeff.get_num());
  return {p.total_degree(), height, p.size()};
}

std::vector<Poly> substitute_row(const std::vector<Poly>& row, const Substitution& s) {
  std::vector<Poly> out;
  for (const auto& e : row) out.push_back(substitute(e, s));
  return out;
}

// Puts entry j first and scales it so its leading coefficient in v is 1.
ChangeVarResult finish(const std::vector<Poly>& f, PolyMatrix U1, std::size_t j, const Substitution& s,
                       std::size_t last) {
  const RingPtr& ring = f.front().ring();
  U1.swap_cols(0, j);
  std::vector<Poly> row = substitute_row(row_times(f, U1), s);
  const Poly lc = row[0].lead_coeff_in(last);
  ensure(lc.is_unit(), "normalized entry is not monic up to a unit");
  if (!lc.is_one()) {
    const Poly inv = Poly::constant(ring, ring->inverse(lc.constant_term()));
    U1.scale_col(0, inv);
    row[0] *= inv;
  }
  ensure(is_monic_in(row[0], last), "normalization left a non-monic first entry");
  return {std::move(U1), s, std::move(row)};
}

// Linear point first, then a univariate ideal, then an algebraic point.
MaxIdeal next_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget) {
  try {
    return search_max_ideal(ideal, budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchExhausted) throw;
    if (auto m = univariate_max_ideal(ideal, budget)) return *m;
    if (auto m = algebraic_max_ideal(ideal, budget)) return *m;
    throw;
  }
}

}  // namespace

ChangeVarResult change_var(const std::vector<Poly>& f, std::size_t nactive, const NormalizationBudget& budget) {
  if (f.empty()) fail(ErrorKind::ShapeError, "empty row");
  const RingPtr& ring = f.front().ring();
  ensure(nactive >= 1 && nactive <= ring->nvars(), "active variable count out of range");
  const std::size_t n = f.size();
  const std::size_t last = nactive - 1;
  const bool field = ring->kind() != CoeffKind::Z;
  if (n < (field ? 2u : 3u)) fail(ErrorKind::RowTooShort, "row too short for normalization");
  const PolyMatrix I = PolyMatrix::identity(ring, n);

  // Some entry already monic in some variable, the last one preferred.
  for (std::size_t j = 0; j < n; ++j)
    if (is_unit_monic_in(f[j], last)) return finish(f, I, j, Substitution::identity(ring), last);
  for (std::size_t v = 0; v < last; ++v)
    for (std::size_t j = 0; j < n; ++j)
      if (is_unit_monic_in(f[j], v)) return finish(f, I, j, Substitution::swap(ring, v, last), last);

  std::size_t examined = 0;
  const auto shifts = shift_vectors(ring->nvars(), last, budget.coeff_bound);

  if (field) {
    for (std::size_t s = 1; s < shifts.size(); ++s) {
      Substitution sub = linear_shift(ring, last, shifts[s]);
      for (std::size_t j = 0; j < n; ++j) {
        if (++examined > budget.max_candidates) fail(ErrorKind::NormalizationExhausted, "linear shift budget exhausted");
        if (f[j].is_zero()) continue;
        if (is_unit_monic_in(substitute(f[j], sub), last)) return finish(f, I, j, sub, last);
      }
    }
    std::size_t j = n;
    for (std::size_t k = 0; k < n; ++k)
      if (!f[k].is_zero() && (j == n || f[k].total_degree() < f[j].total_degree())) j = k;
    ensure(j < n, "zero row reached normalization");
    Substitution sub = nagata_shift(ring, last, static_cast<unsigned>(f[j].total_degree()) + 1);
    return finish(f, I, j, sub, last);
  }

  // Over ZZ: col_i += c*m*col_j combined with a linear shift.
  const auto monomials = small_monomials(nactive, budget.multiplier_degree);
  for (const auto& shift : shifts) {
    Substitution sub = linear_shift(ring, last, shift);
    const std::vector<Poly> g = substitute_row(f, sub);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (const auto& mon : monomials)
          for (long c = 1; c <= budget.coeff_bound; ++c)
            for (long sign : {1, -1}) {
              if (++examined > budget.max_candidates)
                fail(ErrorKind::NormalizationExhausted, "no normalizing column operation within the search budget");
              const Poly mult = Poly::term(ring, Coeff(sign * c), mon);
              Poly h = g[i] + substitute(mult, sub) * g[j];
              if (!is_unit_monic_in(h, last)) continue;
              PolyMatrix U1 = I;
              U1.add_col_multiple(i, j, mult);
              return finish(f, U1, i, sub, last);
            }
      }
  }

  // Greedy descent: apply the single operation with the largest gain in
  // (degree, height, terms) of the entry it changes.
  PolyMatrix U1 = I;
  std::vector<Poly> g = f;
  while (true) {
    for (std::size_t v = last + 1; v-- > 0;) {
      const std::size_t target = v == last ? last : v;
      for (std::size_t j = 0; j < n; ++j)
        if (is_unit_monic_in(g[j], target))
          return finish(f, U1, j, target == last ? Substitution::identity(ring) : Substitution::swap(ring, target, last),
                        last);
    }
    std::optional<std::tuple<std::size_t, std::size_t, Poly, Poly>> best;
    std::tuple<std::int64_t, mpz_class, std::int64_t> best_gain;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || g[j].is_zero()) continue;
        const auto [deg, height, terms] = size_of(g[i]);
        for (const auto& mon : monomials)
          for (long c = 1; c <= budget.coeff_bound; ++c)
            for (long sign : {1, -1}) {
              if (++examined > budget.max_candidates)
                fail(ErrorKind::NormalizationExhausted, "no normalizing column operation within the search budget");
              const Poly mult = Poly::term(ring, Coeff(sign * c), mon);
              Poly h = g[i] + mult * g[j];
              if (h.is_zero()) continue;
              const auto [hdeg, hheight, hterms] = size_of(h);
              std::tuple<std::int64_t, mpz_class, std::int64_t> gain{
                  static_cast<std::int64_t>(deg) - static_cast<std::int64_t>(hdeg), height - hheight,
                  static_cast<std::int64_t>(terms) - static_cast<std::int64_t>(hterms)};
              if (!(gain > std::tuple<std::int64_t, mpz_class, std::int64_t>{0, 0, 0})) continue;
              if (best && !(gain > best_gain)) continue;
              best_gain = std::move(gain);
              best.emplace(i, j, mult, std::move(h));
            }
      }
    if (!best) break;
    auto& [i, j, mult, h] = *best;
    U1.add_col_multiple(i, j, mult);
    g[i] = std::move(h);
  }
  fail(ErrorKind::NormalizationExhausted, "no normalizing column operation within the search budget");
}

LocalLoopResult local_loop(const std::vector<Poly>& f, std::size_t y, const MaxIdealBudget& budget,
                           std::size_t max_iterations) {
  if (f.empty()) fail(ErrorKind::ShapeError, "empty row");
  const BaseRing base(f.front().ring(), y);
  LocalLoopResult out;
  IdealDesc ideal{base.base(), {}};
  for (std::size_t it = 0; it < max_iterations; ++it) {
    if (!ideal.generators.empty()) {
      if (auto cert = one_certificate(ideal)) {
        out.denominators = ideal.generators;
        out.cofactors = std::move(*cert);
        return out;
      }
    }
    MaxIdeal m = next_max_ideal(ideal, budget);
    std::optional<LocalSolution> found;
    while (!found) {
      try {
        found = horrocks(f, y, m);
      } catch (const ModulusSplit& split) {
        m = make_algebraic_ideal(m.ring, m.prime, split.factor, m.images);
      }
    }
    LocalSolution& sol = *found;
    Poly d = base.to_base(sol.denominator);
    ensure(!in_max_ideal(d, m), "local denominator lies in the maximal ideal");
    if (!ideal.generators.empty())
      ensure(!ideal_contains(groebner(ideal), d), "local loop ideal did not grow");
    ideal.generators.push_back(std::move(d));
    out.solutions.push_back(std::move(sol));
  }
  fail(ErrorKind::ResourceExceeded, "local loop did not reach the unit ideal within " +
                                        std::to_string(max_iterations) + " maximal ideals");
}

PatchResult patch(const std::vector<LocalSolution>& solutions, std::size_t y) {
  if (solutions.empty()) fail(ErrorKind::ShapeError, "no local solutions to patch");
  const RingPtr& S = solutions.front().numerator.ring();
  const std::vector<Poly>& f = solutions.front().row;
  const std::size_t n = f.size();
  const BaseRing base(S, y);
  if (S->nvars() >= RingDesc::kMaxVars) fail(ErrorKind::ShapeError, "patching needs one spare variable slot");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < S->nvars(); ++i) names.push_back(S->var(i));
  std::string zname = "_z";
  while (std::find(names.begin(), names.end(), zname) != names.end()) zname += "z";
  names.push_back(zname);
  const RingPtr T = with_vars(*S, names);
  const std::size_t z = S->nvars();
  std::vector<int> embed;
  for (std::size_t i = 0; i < S->nvars(); ++i) embed.push_back(static_cast<int>(i));
  std::vector<Poly> shift_images;
  for (std::size_t i = 0; i < S->nvars(); ++i)
    shift_images.push_back(i == y ? Poly::variable(T, y) + Poly::variable(T, z) : Poly::variable(T, i));
  shift_images.push_back(Poly::variable(T, z));

  // Graded pieces P_e of M(y) adj(M(y+z)) in z, and the exponent each needs.
  struct Piece {
    std::vector<PolyMatrix> graded;
    Poly delta, d;
  };
  std::vector<Piece> pieces;
  unsigned N = 1;
  for (const auto& sol : solutions) {
    if (!same_ring(sol.numerator.ring(), S) || sol.y != y) fail(ErrorKind::RingMismatch, "local solutions disagree");
    const PolyMatrix M = sol.numerator.map(T, [&](const Poly& p) { return map_vars(p, T, embed); });
    const PolyMatrix Mz = M.map([&](const Poly& p) { return substitute(p, shift_images); });
    const PolyMatrix P = M * adjugate(Mz);
    Piece piece{{}, map_vars(sol.det_numerator, T, embed), map_vars(sol.denominator, T, embed)};
    long zdeg = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) zdeg = std::max(zdeg, P(r, c).degree_in(z));
    for (long e = 0; e <= zdeg; ++e) piece.graded.push_back(P.map([&](const Poly& p) { return p.coeff_in(z, e); }));
    ensure(piece.graded[0] == PolyMatrix::identity(T, n).scaled(piece.delta), "H(y, 0) is not the identity");

    auto works = [&](unsigned k) {
      for (long e = 1; e <= zdeg; ++e) {
        const Poly scale = piece.d.pow(k * static_cast<unsigned>(e));
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (!exact_divide(piece.graded[e](r, c) * scale, piece.delta)) return false;
      }
      return true;
    };
    long ydeg = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) ydeg = std::max(ydeg, sol.numerator(r, c).degree_in(y));
    const unsigned cap = static_cast<unsigned>(2 * ydeg + 2);
    unsigned k = 1;
    while (!works(k)) {
      ++k;
      ensure(k <= cap, "no exponent up to " + std::to_string(cap) + " clears the patch denominators");
    }
    N = std::max(N, k);
    pieces.push_back(std::move(piece));
  }

  IdealDesc powers{base.base(), {}};
  for (const auto& sol : solutions) powers.generators.push_back(base.to_base(sol.denominator).pow(N));
  auto cert = one_certificate(powers);
  if (!cert) fail(ErrorKind::DenominatorsNotComaximal, "local denominators do not generate the unit ideal");

  PatchResult out{PolyMatrix::identity(S, n), N, {}};
  const Poly yv = Poly::variable(S, y);
  Poly current = yv;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const Poly c = base.to_total((*cert)[j]);
    out.cofactors.push_back(c);
    const Poly dN = base.to_total(powers.generators[j]);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < S->nvars(); ++i) images.push_back(i == y ? current : Poly::variable(S, i));
    images.push_back(-c * yv);
    const Piece& piece = pieces[j];
    PolyMatrix G(S, n, n);
    for (std::size_t e = 0; e < piece.graded.size(); ++e) {
      const Poly scale = piece.d.pow(N * static_cast<unsigned>(e));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) {
          if (piece.graded[e](r, col).is_zero()) continue;
          auto q = exact_divide(piece.graded[e](r, col) * scale, piece.delta);
          ensure(q.has_value(), "patch piece is not divisible by det L");
          G(r, col) += substitute(*q * Poly::variable(T, z).pow(static_cast<unsigned>(e)), images);
        }
    }
    out.U = out.U * G;
    current -= c * dN * yv;
  }
  ensure(current.is_zero(), "patch cofactors do not telescope to zero");

  std::vector<Poly> at_zero;
  for (const auto& e : f) at_zero.push_back(eval_at_zero(e, y));
  ensure(row_times(f, out.U) == at_zero, "patched matrix does not send f to f(y=0)");
  ensure(determinant(out.U).is_one(), "patched matrix does not have determinant 1");
  return out;
}

PolyMatrix EliminationRound::transform() const {
  const Substitution back = subs.inverted();
  return U1 * U2.map([&](const Poly& p) { return substitute(p, back); });
}

EliminationRound eliminate_last_var(const std::vector<Poly>& f, std::size_t nactive,
                                    const EliminationOptions& options) {
  ChangeVarResult cv = change_var(f, nactive, options.normalization);
  const std::size_t y = nactive - 1;
  LocalLoopResult loop = local_loop(cv.row, y, options.max_ideal);
  PatchResult pr = patch(loop.solutions, y);

  EliminationRound round{f, y, std::move(cv.U1), std::move(cv.subs), std::move(loop.solutions), std::move(pr.U), {}};
  for (const auto& e : cv.row) round.output.push_back(eval_at_zero(e, y));
  std::vector<Poly> back;
  for (const auto& e : round.output) back.push_back(substitute(e, round.subs.inverted()));
  ensure(row_times(f, round.transform()) == back, "elimination round broke f * U = f(y=0)");
  for (const auto& e : round.output) ensure(!e.uses_var(y), "eliminated variable survived the round");
  return round;
}

}  // namespace quillen
