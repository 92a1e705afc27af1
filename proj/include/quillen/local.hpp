#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quillen/ideal.hpp"
#include "quillen/poly.hpp"

namespace quillen {

/// Maximal ideal of A = R[x1..xk] in linear-point form:
/// (p, x1 - a1, ..., xk - ak) over ZZ, (x1 - a1, ..., xk - ak) over a field.
/// Maximality is structural: A/m is F_p or the coefficient field. The
/// univariate form below covers ideals without such a point.
struct MaxIdeal {
  RingPtr ring;
  /// Reduced Gröbner basis of m.
  std::vector<Poly> gens;
  /// Residue characteristic over ZZ; 0 over fields.
  long prime = 0;
  /// One coordinate per variable of the ring (point form only).
  std::vector<Coeff> point;
  /// Univariate form: m is the kernel of A -> k[t]/(modulus) sending x_i to
  /// images[i], with k = QQ or F_p and modulus monic. Treated as irreducible
  /// until an element shares a proper factor with it.
  std::optional<Poly> modulus;
  std::vector<Poly> images;

  bool is_point() const { return !modulus.has_value(); }

  /// f mod m, as an element of the residue field (a canonical coefficient).
  Coeff residue(const Poly& f) const;
  std::vector<std::string> gen_strings() const;
};

struct MaxIdealBudget {
  /// Largest prime tried over ZZ.
  long max_prime = 97;
  /// Coordinates in {0, +-1, ..., +-box} over QQ.
  long box = 10;
  /// Variables that may carry a nonzero coordinate.
  std::size_t max_search_vars = 3;
  /// Cap on evaluated points over all primes.
  std::size_t max_points = 5'000'000;
};

/// Builds a linear-point ideal and certifies its Gröbner basis.
MaxIdeal make_point_ideal(const RingPtr& ring, long prime, std::vector<Coeff> point);

/// Ideal of the univariate form; h is made monic over the residue field. An
/// empty point puts every other variable at 0.
MaxIdeal make_univariate_ideal(const RingPtr& ring, long prime, std::size_t var, const Poly& h,
                               std::vector<Coeff> point = {});

/// Kernel of A -> k[t]/(h) with x_i -> images[i]; h and the images live in
/// the one-variable residue ring.
MaxIdeal make_algebraic_ideal(const RingPtr& ring, long prime, const Poly& h, std::vector<Poly> images);

/// Raised by Localization::is_unit when an element has a proper common
/// factor with the modulus of a univariate ideal. The caller retries with
/// the factor as the new modulus.
struct ModulusSplit {
  Poly factor;
};

/// Monic gcd over a field coefficient ring, one variable.
Poly univariate_gcd(Poly a, Poly b);

/// Fallback when no linear point exists: the first (prime, variable, point on
/// the other variables) at which the generators share a nonconstant factor.
std::optional<MaxIdeal> univariate_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget = {});

/// Last resort: fixes free coordinates, takes the radical and reads the
/// residue field off a primitive element in shape form.
std::optional<MaxIdeal> algebraic_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget = {});

/// First maximal ideal (primes ascending, points lexicographic) containing
/// the ideal. Throws NotProper when 1 lies in the ideal and SearchExhausted
/// when the budget runs out.
MaxIdeal get_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget = {});

/// Same search without the properness check; the caller has established it.
MaxIdeal search_max_ideal(const IdealDesc& ideal, const MaxIdealBudget& budget = {});

/// f reduces to zero modulo m. Decided by evaluation at the point, which
/// agrees with reduction against the stored basis.
bool in_max_ideal(const Poly& f, const MaxIdeal& m);

/// Views a ring S = A[y] through its base A = S without y.
class BaseRing {
 public:
  BaseRing(RingPtr total, std::size_t y);

  const RingPtr& total() const { return total_; }
  const RingPtr& base() const { return base_; }
  std::size_t y() const { return y_; }

  /// Throws InvariantViolation if f involves y.
  Poly to_base(const Poly& f) const;
  Poly to_total(const Poly& a) const;

 private:
  RingPtr total_, base_;
  std::size_t y_;
  std::vector<int> total_to_base_, base_to_total_;
};

/// Element num/den of A_m[y]: num in S = A[y], den in A \ m.
struct LocalElem {
  Poly num;
  Poly den;
};

/// Arithmetic in the localization A_m[y].
class Localization {
 public:
  Localization(BaseRing base, MaxIdeal m);

  const BaseRing& base() const { return base_; }
  const MaxIdeal& ideal() const { return m_; }

  /// f is y-free and its base image lies outside m.
  bool is_unit(const Poly& f) const;
  /// Coefficient of f (in S, y-free) lies in m.
  bool in_ideal(const Poly& f) const;

  LocalElem make(const Poly& num, const Poly& den) const;
  /// 1/u; throws NotLocalUnit when u lies in m.
  LocalElem invert(const Poly& u) const;
  LocalElem add(const LocalElem& a, const LocalElem& b) const;
  LocalElem mul(const LocalElem& a, const LocalElem& b) const;

 private:
  BaseRing base_;
  MaxIdeal m_;
};

/// 1/u in A_m for u in A \ m; throws NotLocalUnit.
LocalElem local_invert(const Poly& u, const MaxIdeal& m);

/// "num/den" with the quotient simplified when den divides num.
std::string to_string(const LocalElem& e);

}  // namespace quillen
