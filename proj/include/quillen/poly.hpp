#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quillen/ring.hpp"

namespace quillen {

enum class MonomialOrder { Grevlex, Lex };

/// Exponent vector. Slots past the ring's variable count stay zero, so
/// comparisons never need to know the ring.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() { exps_.fill(0); }

  static Monomial var(std::size_t i, Exponent e = 1) {
    Monomial m;
    m.exps_[i] = e;
    return m;
  }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }

  std::uint64_t degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;
  /// Throws InvariantViolation on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  /// this / other, assuming other divides this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::array<Exponent, RingDesc::kMaxVars> exps_;
};

/// -1, 0, 1 as a is smaller, equal, or greater than b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
  Monomial mon;
  Coeff coeff;
};

/// Sparse multivariate polynomial over a RingDesc. Terms are kept in
/// strictly descending grevlex order with no zero coefficients.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Coeff& c);
  static Poly constant(RingPtr ring, long c) { return constant(std::move(ring), Coeff(c)); }
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly term(RingPtr ring, const Coeff& c, const Monomial& m);
  /// Arbitrary term list: sorted, merged and normalized.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  /// Constant coefficient (coefficient of the monomial 1).
  Coeff constant_term() const;
  bool is_unit() const { return is_constant() && !is_zero() && ring_->is_unit(terms_[0].coeff); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }

  std::uint64_t total_degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  long degree_in(std::size_t var) const;
  bool uses_var(std::size_t var) const { return degree_in(var) > 0; }
  /// One past the highest variable index that occurs (0 for constants).
  std::size_t active_vars() const;

  const Term& leading_term() const { return terms_.front(); }
  Term leading_term(MonomialOrder order) const;

  /// Coefficient of var^k, as a polynomial in the other variables.
  Poly coeff_in(std::size_t var, long k) const;
  /// Leading coefficient with respect to one variable.
  Poly lead_coeff_in(std::size_t var) const { return coeff_in(var, degree_in(var)); }

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g) { return *this = *this * g; }
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);

  Poly scaled(const Coeff& c) const;
  Poly mul_term(const Coeff& c, const Monomial& m) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& g) const;
  bool operator!=(const Poly& g) const { return !(*this == g); }

  std::string str() const;

 private:
  void check_ring(const Poly& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Univariate views and division

/// f = q*g + r with deg_v(r) < deg_v(g). Requires g monic in v; throws NotMonic.
std::pair<Poly, Poly> divmod_by_monic(const Poly& f, const Poly& g, std::size_t v);

struct PseudoDivision {
  unsigned power;  ///< lc_v(g)^power * f = q*g + r
  Poly quotient;
  Poly remainder;
};

/// Pseudo-division in v. The multiplier is lc_v(g)^power and power is 0
/// when lc_v(g) is a constant unit of the coefficient ring.
PseudoDivision pseudo_divmod(const Poly& f, const Poly& g, std::size_t v);

/// Leading coefficient in v is exactly the constant 1.
bool is_monic_in(const Poly& f, std::size_t v);
/// Leading coefficient in v is a constant unit of the coefficient ring.
bool is_unit_monic_in(const Poly& f, std::size_t v);
Poly eval_at_zero(const Poly& f, std::size_t v);

/// a / b when b divides a exactly, else nullopt.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

// ---------------------------------------------------------------------------
// Substitution and ring changes

/// Simultaneous substitution var_i -> images[i]; images live in the target ring.
Poly substitute(const Poly& f, const std::vector<Poly>& images);

/// Moves f into another ring, sending variable i to variable index_map[i]
/// (-1 means the variable must not occur).
Poly map_vars(const Poly& f, const RingPtr& target, const std::vector<int>& index_map);

/// Invertible change of variables, checked at construction.
class Substitution {
 public:
  /// Throws InvariantViolation unless inverse(forward(x_i)) = x_i for all i.
  Substitution(RingPtr ring, std::vector<Poly> forward, std::vector<Poly> inverse);

  static Substitution identity(const RingPtr& ring);
  static Substitution swap(const RingPtr& ring, std::size_t i, std::size_t j);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& forward() const { return forward_; }
  const std::vector<Poly>& inverse() const { return inverse_; }
  bool is_identity() const;

  Substitution inverted() const { return Substitution(ring_, inverse_, forward_); }
  /// Apply this, then next.
  Substitution then(const Substitution& next) const;

 private:
  RingPtr ring_;
  std::vector<Poly> forward_;
  std::vector<Poly> inverse_;
};

Poly substitute(const Poly& f, const Substitution& s);

// ---------------------------------------------------------------------------
// Canonical text form

/// Canonical string: descending grevlex, e.g. "2*x^5*y^2 - 3/4*x + 1".
std::string to_string(const Poly& f);
/// Accepts integers, p/q (QQ only), variables, + - * ^ and parentheses.
/// Throws ParseError.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace quillen
