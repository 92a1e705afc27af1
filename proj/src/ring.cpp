#include "quillen/ring.hpp"

#include <algorithm>
#include <set>

#include "quillen/error.hpp"

namespace quillen {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::ResourceExceeded: return "ResourceExceeded";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotLocalUnit: return "NotLocalUnit";
    case ErrorKind::NoMonicEntry: return "NoMonicEntry";
    case ErrorKind::NotUnimodularLocally: return "NotUnimodularLocally";
    case ErrorKind::RowTooShort: return "RowTooShort";
    case ErrorKind::NormalizationExhausted: return "NormalizationExhausted";
    case ErrorKind::DenominatorsNotComaximal: return "DenominatorsNotComaximal";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_prime(long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

RingDesc::RingDesc(CoeffKind kind, std::vector<std::string> vars, long modulus)
    : kind_(kind), modulus_(kind == CoeffKind::Zp ? modulus : 0), vars_(std::move(vars)) {
  if (kind_ == CoeffKind::Zp && (modulus_ >= (1L << 31) || !is_prime(modulus_)))
    fail(ErrorKind::ParseError, "modulus " + std::to_string(modulus) + " is not a prime below 2^31");
  if (vars_.size() > kMaxVars)
    fail(ErrorKind::ShapeError, "at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || !seen.insert(v).second)
      fail(ErrorKind::ShapeError, "variable names must be distinct and nonempty");
  }
}

int RingDesc::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool RingDesc::operator==(const RingDesc& other) const {
  return kind_ == other.kind_ && modulus_ == other.modulus_ && vars_ == other.vars_;
}

Coeff RingDesc::normalize(Coeff c) const {
  c.canonicalize();
  switch (kind_) {
    case CoeffKind::Q:
      return c;
    case CoeffKind::Z:
      ensure(c.get_den() == 1, "non-integral coefficient in a ZZ polynomial");
      return c;
    case CoeffKind::Zp: {
      mpz_class p(modulus_);
      mpz_class num = c.get_num() % p;
      if (c.get_den() != 1) {
        mpz_class den = c.get_den() % p;
        if (den < 0) den += p;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
          fail(ErrorKind::NotAUnit, "denominator divisible by the characteristic");
        num = (num * inv) % p;
      }
      if (num < 0) num += p;
      return Coeff(num);
    }
  }
  return c;
}

bool RingDesc::is_unit(const Coeff& c) const {
  if (kind_ == CoeffKind::Z) return c == 1 || c == -1;
  return c != 0;
}

Coeff RingDesc::inverse(const Coeff& c) const {
  if (!is_unit(c)) fail(ErrorKind::NotAUnit, c.get_str() + " is not a unit in " + to_string());
  if (kind_ == CoeffKind::Z) return c;
  if (kind_ == CoeffKind::Q) return Coeff(1) / c;
  mpz_class inv, p(modulus_), v = c.get_num();
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Coeff(inv);
}

bool RingDesc::divides(const Coeff& a, const Coeff& b) const {
  if (a == 0) return b == 0;
  if (kind_ != CoeffKind::Z) return true;
  return mpz_divisible_p(b.get_num_mpz_t(), a.get_num_mpz_t()) != 0;
}

Coeff RingDesc::exact_quotient(const Coeff& b, const Coeff& a) const {
  if (kind_ == CoeffKind::Z) return Coeff(mpz_class(b.get_num() / a.get_num()));
  return normalize(b * inverse(a));
}

std::string RingDesc::to_string() const {
  std::string s;
  switch (kind_) {
    case CoeffKind::Q: s = "QQ"; break;
    case CoeffKind::Z: s = "ZZ"; break;
    case CoeffKind::Zp: s = "ZZ/" + std::to_string(modulus_); break;
  }
  s += "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
  return s + "]";
}

RingPtr make_ring(CoeffKind kind, std::vector<std::string> vars, long modulus) {
  return std::make_shared<const RingDesc>(kind, std::move(vars), modulus);
}

RingPtr with_vars(const RingDesc& ring, std::vector<std::string> vars) {
  return make_ring(ring.kind(), std::move(vars), ring.modulus());
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

std::tuple<mpz_class, mpz_class, mpz_class> ext_gcd(const mpz_class& a, const mpz_class& b) {
  // Iterative Euclid on (a, b) keeping r_i = s_i*a + t_i*b.
  mpz_class r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    mpz_class r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  if (r0 == 0) { s0 = 0; t0 = 0; }
  return {r0, s0, t0};
}

Coeff coeff_invert(const Coeff& c, const RingDesc& ring) { return ring.inverse(ring.normalize(c)); }

}  // namespace quillen
