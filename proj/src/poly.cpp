#include "quillen/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include "quillen/error.hpp"

namespace quillen {

// ---------------------------------------------------------------------------
// Monomial

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t e = std::uint64_t(exps_[i]) + other.exps_[i];
    ensure(e <= std::numeric_limits<Exponent>::max(), "exponent overflow");
    m.exps_[i] = static_cast<Exponent>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = exps_[i] - other.exps_[i];
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < RingDesc::kMaxVars; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = RingDesc::kMaxVars; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

namespace {

bool grevlex_greater(const Term& a, const Term& b) {
  return compare(a.mon, b.mon, MonomialOrder::Grevlex) > 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(RingPtr ring, const Coeff& c) {
  Poly p(std::move(ring));
  Coeff v = p.ring_->normalize(c);
  if (v != 0) p.terms_.push_back({Monomial(), v});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  ensure(index < ring->nvars(), "variable index out of range");
  Poly p(std::move(ring));
  p.terms_.push_back({Monomial::var(index), Coeff(1)});
  return p;
}

Poly Poly::term(RingPtr ring, const Coeff& c, const Monomial& m) {
  Poly p(std::move(ring));
  Coeff v = p.ring_->normalize(c);
  if (v != 0) p.terms_.push_back({m, v});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty()) {
        p.terms_.back().coeff = p.ring_->normalize(p.terms_.back().coeff);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      }
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty()) {
    p.terms_.back().coeff = p.ring_->normalize(p.terms_.back().coeff);
    if (p.terms_.back().coeff == 0) p.terms_.pop_back();
  }
  return p;
}

Coeff Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coeff;
  return Coeff(0);
}

std::uint64_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mon.degree(); }

long Poly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  long d = 0;
  for (const auto& t : terms_) d = std::max<long>(d, t.mon[var]);
  return d;
}

std::size_t Poly::active_vars() const {
  std::size_t n = 0;
  for (const auto& t : terms_)
    for (std::size_t i = n; i < ring_->nvars(); ++i)
      if (t.mon[i]) n = i + 1;
  return n;
}

Term Poly::leading_term(MonomialOrder order) const {
  ensure(!terms_.empty(), "leading term of zero polynomial");
  if (order == MonomialOrder::Grevlex) return terms_.front();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (compare(terms_[i].mon, terms_[best].mon, order) > 0) best = i;
  return terms_[best];
}

Poly Poly::coeff_in(std::size_t var, long k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (long(t.mon[var]) == k) {
      Term c = t;
      c.mon[var] = 0;
      out.push_back(std::move(c));
    }
  }
  return from_terms(ring_, std::move(out));
}

void Poly::check_ring(const Poly& g) const {
  if (!same_ring(ring_, g.ring_))
    fail(ErrorKind::RingMismatch, ring_->to_string() + " vs " + g.ring_->to_string());
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mon, ring_->normalize(-t.coeff)});
  return r;
}

namespace {

// Merge two descending term lists, combining with sign.
std::vector<Term> merge_terms(const RingDesc& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : compare(a[i].mon, b[j].mon, MonomialOrder::Grevlex);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mon, subtract ? ring.normalize(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Coeff v = subtract ? Coeff(a[i].coeff - b[j].coeff) : Coeff(a[i].coeff + b[j].coeff);
      v = ring.normalize(std::move(v));
      if (v != 0) out.push_back({a[i].mon, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& g) {
  check_ring(g);
  terms_ = merge_terms(*ring_, terms_, g.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  check_ring(g);
  terms_ = merge_terms(*ring_, terms_, g.terms_, true);
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  f.check_ring(g);
  if (f.is_zero() || g.is_zero()) return Poly(f.ring_);
  if (g.terms_.size() == 1) return f.mul_term(g.terms_[0].coeff, g.terms_[0].mon);
  if (f.terms_.size() == 1) return g.mul_term(f.terms_[0].coeff, f.terms_[0].mon);
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) prod.push_back({a.mon * b.mon, a.coeff * b.coeff});
  return Poly::from_terms(f.ring_, std::move(prod));
}

Poly Poly::scaled(const Coeff& c) const {
  Coeff v = ring_->normalize(c);
  Poly r(ring_);
  if (v == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff w = ring_->normalize(t.coeff * v);
    if (w != 0) r.terms_.push_back({t.mon, std::move(w)});
  }
  return r;
}

Poly Poly::mul_term(const Coeff& c, const Monomial& m) const {
  // Multiplying by a monomial preserves the order, so no re-sort.
  Coeff v = ring_->normalize(c);
  Poly r(ring_);
  if (v == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff w = ring_->normalize(t.coeff * v);
    if (w != 0) r.terms_.push_back({t.mon * m, std::move(w)});
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool Poly::operator==(const Poly& g) const {
  if (!same_ring(ring_, g.ring_) || terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mon == g.terms_[i].mon) || terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

std::string Poly::str() const { return to_string(*this); }

// ---------------------------------------------------------------------------
// Division

bool is_monic_in(const Poly& f, std::size_t v) { return !f.is_zero() && f.lead_coeff_in(v).is_one(); }

bool is_unit_monic_in(const Poly& f, std::size_t v) { return !f.is_zero() && f.lead_coeff_in(v).is_unit(); }

Poly eval_at_zero(const Poly& f, std::size_t v) { return f.coeff_in(v, 0); }

std::pair<Poly, Poly> divmod_by_monic(const Poly& f, const Poly& g, std::size_t v) {
  if (!is_monic_in(g, v)) fail(ErrorKind::NotMonic, "divisor " + to_string(g) + " is not monic in " + g.ring()->var(v));
  const long dg = g.degree_in(v);
  Poly q(f.ring()), r = f;
  for (long dr = r.degree_in(v); dr >= dg; dr = r.degree_in(v)) {
    Poly t = r.coeff_in(v, dr).mul_term(Coeff(1), Monomial::var(v, static_cast<Monomial::Exponent>(dr - dg)));
    r -= t * g;
    q += t;
  }
  return {std::move(q), std::move(r)};
}

PseudoDivision pseudo_divmod(const Poly& f, const Poly& g, std::size_t v) {
  ensure(!g.is_zero(), "pseudo-division by zero");
  const long dg = g.degree_in(v);
  const Poly lc = g.lead_coeff_in(v);
  if (lc.is_unit()) {
    Coeff inv = g.ring()->inverse(lc.constant_term());
    auto [q, r] = divmod_by_monic(f, g.scaled(inv), v);
    return {0, q.scaled(inv), std::move(r)};
  }
  PseudoDivision out{0, Poly(f.ring()), f};
  for (long dr = out.remainder.degree_in(v); dr >= dg; dr = out.remainder.degree_in(v)) {
    Poly t = out.remainder.coeff_in(v, dr).mul_term(Coeff(1), Monomial::var(v, static_cast<Monomial::Exponent>(dr - dg)));
    out.remainder = lc * out.remainder - t * g;
    out.quotient = lc * out.quotient + t;
    ++out.power;
  }
  return out;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Poly>(Poly(a.ring())) : std::nullopt;
  const auto& ring = *a.ring();
  const Term& lb = b.leading_term();
  Poly q(a.ring()), r = a;
  std::vector<Term> qterms;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lb.mon.divides(lr.mon) || !ring.divides(lb.coeff, lr.coeff)) return std::nullopt;
    Coeff c = ring.exact_quotient(lr.coeff, lb.coeff);
    Monomial m = lr.mon / lb.mon;
    r -= b.mul_term(c, m);
    qterms.push_back({m, c});
  }
  return Poly::from_terms(a.ring(), std::move(qterms));
}

// ---------------------------------------------------------------------------
// Substitution

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
  ensure(images.size() >= f.active_vars(), "substitution does not cover all variables");
  ensure(!images.empty() || f.is_constant(), "substitution has no images");
  if (f.is_zero()) return images.empty() ? f : Poly(images[0].ring());
  const RingPtr& target = images.empty() ? f.ring() : images[0].ring();
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, std::size_t e) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly::constant(target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  Poly result(target);
  for (const auto& t : f.terms()) {
    Poly acc = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size() && !acc.is_zero(); ++i)
      if (t.mon[i]) acc *= power(i, t.mon[i]);
    result += acc;
  }
  return result;
}

Poly map_vars(const Poly& f, const RingPtr& target, const std::vector<int>& index_map) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
      if (!t.mon[i]) continue;
      ensure(i < index_map.size() && index_map[i] >= 0, "variable " + f.ring()->var(i) + " has no image");
      m[static_cast<std::size_t>(index_map[i])] = t.mon[i];
    }
    out.push_back({m, target->normalize(t.coeff)});
  }
  return Poly::from_terms(target, std::move(out));
}

Substitution::Substitution(RingPtr ring, std::vector<Poly> forward, std::vector<Poly> inverse)
    : ring_(std::move(ring)), forward_(std::move(forward)), inverse_(std::move(inverse)) {
  ensure(forward_.size() == ring_->nvars() && inverse_.size() == ring_->nvars(),
         "substitution must give an image for every variable");
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    Poly x = Poly::variable(ring_, i);
    ensure(substitute(forward_[i], inverse_) == x && substitute(inverse_[i], forward_) == x,
           "substitution is not invertible on " + ring_->var(i));
  }
}

Substitution Substitution::identity(const RingPtr& ring) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Poly::variable(ring, i));
  return Substitution(ring, vars, vars);
}

Substitution Substitution::swap(const RingPtr& ring, std::size_t i, std::size_t j) {
  std::vector<Poly> vars;
  for (std::size_t k = 0; k < ring->nvars(); ++k) vars.push_back(Poly::variable(ring, k));
  std::swap(vars[i], vars[j]);
  return Substitution(ring, vars, vars);
}

bool Substitution::is_identity() const {
  for (std::size_t i = 0; i < forward_.size(); ++i)
    if (forward_[i] != Poly::variable(ring_, i)) return false;
  return true;
}

Substitution Substitution::then(const Substitution& next) const {
  // x -> forward(x) -> next.forward applied to that
  std::vector<Poly> fwd, inv;
  for (const auto& p : forward_) fwd.push_back(substitute(p, next.forward_));
  for (const auto& p : next.inverse_) inv.push_back(substitute(p, inverse_));
  return Substitution(ring_, std::move(fwd), std::move(inv));
}

Poly substitute(const Poly& f, const Substitution& s) {
  if (f.ring()->nvars() == 0) return f;
  return substitute(f, s.forward());
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Coeff c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mon.is_one()) {
      out += c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (!t.mon[i]) continue;
      if (wrote) out += "*";
      out += ring.var(i);
      if (t.mon[i] > 1) out += "^" + std::to_string(t.mon[i]);
      wrote = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = signed_term();
    while (true) {
      if (accept('+')) acc += signed_term();
      else if (accept('-')) acc -= signed_term();
      else return acc;
    }
  }

  Poly signed_term() {
    if (accept('-')) return -signed_term();
    if (accept('+')) return signed_term();
    return term();
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      if (accept('*')) {
        acc *= signed_power();
      } else if (accept('/')) {
        if (ring_->kind() != CoeffKind::Q) error("division is only allowed over QQ");
        Poly d = signed_power();
        if (!d.is_constant() || d.is_zero()) error("divisor must be a nonzero constant");
        acc = acc.scaled(Coeff(1) / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Poly signed_power() {
    if (accept('-')) return -signed_power();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > std::numeric_limits<Monomial::Exponent>::max()) error("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly::constant(ring_, Coeff(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        error("unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, static_cast<std::size_t>(idx));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace quillen
