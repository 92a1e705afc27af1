#pragma once

#include <random>
#include <string>
#include <vector>

#include "quillen/ideal.hpp"
#include "quillen/matrix.hpp"
#include "quillen/poly.hpp"

namespace quillen::testing {

inline std::vector<Poly> parse_row(const std::vector<std::string>& row, const RingPtr& ring) {
  std::vector<Poly> out;
  for (const auto& s : row) out.push_back(parse_poly(s, ring));
  return out;
}

inline std::vector<std::string> strings(const std::vector<Poly>& row) {
  std::vector<std::string> out;
  for (const auto& p : row) out.push_back(to_string(p));
  return out;
}

inline PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const RingPtr& ring) {
  std::vector<std::vector<Poly>> out;
  for (const auto& r : rows) out.push_back(parse_row(r, ring));
  return PolyMatrix::from_rows(ring, out);
}

/// Random polynomial with up to `terms` terms, total degree <= max_degree,
/// integer coefficients in [-bound, bound].
inline Poly random_poly(const RingPtr& ring, std::mt19937& rng, unsigned max_degree, long bound, int terms = 3) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  std::uniform_int_distribution<int> count(1, terms);
  std::vector<Term> ts;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    unsigned left = max_degree;
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      const unsigned e = std::min(exp(rng), left);
      m[v] = e;
      left -= e;
    }
    ts.push_back({m, Coeff(coeff(rng))});
  }
  return Poly::from_terms(ring, std::move(ts));
}

/// Product of up to `ops` elementary matrices with random off-diagonal entries.
inline PolyMatrix random_elementary(const RingPtr& ring, std::size_t n, std::mt19937& rng, int ops,
                                    unsigned max_degree = 2, long bound = 3) {
  PolyMatrix E = PolyMatrix::identity(ring, n);
  std::uniform_int_distribution<int> count(1, ops);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    const std::size_t i = index(rng), j = index(rng);
    if (i == j) continue;
    E.add_col_multiple(i, j, random_poly(ring, rng, max_degree, bound));
  }
  return E;
}

/// Integer gcd by trial of every candidate divisor.
inline long brute_gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  for (long d = std::max(a, b); d >= 1; --d)
    if (a % d == 0 && b % d == 0) return d;
  return 0;
}

/// All monomials in the ring of total degree <= d.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out{Monomial()};
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (unsigned e = 0; m.degree() + e <= d; ++e) {
        Monomial k = m;
        k[v] = e;
        next.push_back(k);
      }
    out = std::move(next);
  }
  return out;
}

inline mpz_class as_int(const Poly& p) { return p.constant_term().get_num(); }

// d_1 * ... * d_k = gcd of the k x k minors.
inline std::vector<mpz_class> determinantal_divisors(const PolyMatrix& a) {
  std::vector<mpz_class> out;
  const std::size_t r = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    mpz_class g = 0;
    for (const auto& m : minors(a, k)) g = gcd(g, as_int(m));
    out.push_back(g);
  }
  return out;
}

inline PolyMatrix random_int_matrix(const RingPtr& R, std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 4), entry(-20, 20);
  const std::size_t n = dim(rng), m = dim(rng);
  PolyMatrix a(R, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = Poly::constant(R, entry(rng));
  return a;
}

inline Poly expand(const std::vector<Poly>& cofactors, const std::vector<Poly>& gens) {
  Poly sum(gens.front().ring());
  for (std::size_t i = 0; i < gens.size(); ++i) sum += cofactors[i] * gens[i];
  return sum;
}

// Membership over QQ with cofactors of degree <= d: solve the linear system
// on monomial coefficients by exact Gaussian elimination.
inline bool brute_member_qq(const Poly& f, const std::vector<Poly>& gens, unsigned d) {
  const RingPtr& R = f.ring();
  const auto mons = quillen::testing::monomials_up_to(R->nvars(), d);
  std::vector<Poly> columns;
  for (const auto& g : gens)
    for (const auto& m : mons) columns.push_back(g.mul_term(1, m));
  std::vector<Monomial> rows;
  auto row_of = [&](const Monomial& m) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] == m) return i;
    rows.push_back(m);
    return rows.size() - 1;
  };
  for (const auto& c : columns)
    for (const auto& t : c.terms()) row_of(t.mon);
  for (const auto& t : f.terms()) row_of(t.mon);
  const std::size_t nr = rows.size(), nc = columns.size();
  std::vector<std::vector<Coeff>> a(nr, std::vector<Coeff>(nc + 1, Coeff(0)));
  for (std::size_t j = 0; j < nc; ++j)
    for (const auto& t : columns[j].terms()) a[row_of(t.mon)][j] = t.coeff;
  for (const auto& t : f.terms()) a[row_of(t.mon)][nc] = t.coeff;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Coeff k = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= nc; ++j) a[i][j] -= k * a[r][j];
    }
    ++r;
  }
  for (std::size_t i = r; i < nr; ++i)
    if (a[i][nc] != 0) return false;
  return true;
}

}  // namespace quillen::testing
