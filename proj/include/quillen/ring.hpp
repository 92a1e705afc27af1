#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace quillen {

enum class CoeffKind { Q, Z, Zp };

/// Coefficients are stored as reduced GMP rationals. Over Z the denominator
/// is always 1; over Z/p the value is an integer in [0, p).
using Coeff = mpq_class;

/// Coefficient ring plus an ordered list of variable names: the polynomial
/// ring R[vars]. Immutable; shared between polynomials through RingPtr.
class RingDesc {
 public:
  static constexpr std::size_t kMaxVars = 8;

  /// ShapeError for duplicate or too many variables, ParseError for a
  /// modulus that is not a prime below 2^31.
  RingDesc(CoeffKind kind, std::vector<std::string> vars, long modulus = 0);

  CoeffKind kind() const { return kind_; }
  long modulus() const { return modulus_; }
  bool is_field() const { return kind_ != CoeffKind::Z; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  bool operator==(const RingDesc& other) const;

  // Coefficient arithmetic. Every result is canonical for this ring.
  Coeff normalize(Coeff c) const;
  Coeff from_int(long v) const { return normalize(Coeff(v)); }
  bool is_unit(const Coeff& c) const;
  /// Throws NotAUnit.
  Coeff inverse(const Coeff& c) const;
  /// True iff a divides b in the coefficient ring.
  bool divides(const Coeff& a, const Coeff& b) const;
  /// b / a, assuming divides(a, b).
  Coeff exact_quotient(const Coeff& b, const Coeff& a) const;
  /// Short ring label such as "ZZ[x,y]".
  std::string to_string() const;

 private:
  CoeffKind kind_;
  long modulus_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const RingDesc>;

RingPtr make_ring(CoeffKind kind, std::vector<std::string> vars, long modulus = 0);
/// Same coefficient ring, different variables.
RingPtr with_vars(const RingDesc& ring, std::vector<std::string> vars);

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Deterministic trial division.
bool is_prime(long p);

/// Extended gcd: g = gcd(a, b) >= 0 and g = s*a + t*b.
std::tuple<mpz_class, mpz_class, mpz_class> ext_gcd(const mpz_class& a, const mpz_class& b);

/// Inverse of a unit coefficient; throws NotAUnit otherwise.
Coeff coeff_invert(const Coeff& c, const RingDesc& ring);

}  // namespace quillen
