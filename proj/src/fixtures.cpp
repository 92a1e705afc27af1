#include "quillen/fixtures.hpp"

#include <functional>
#include <optional>

#include "quillen/driver.hpp"
#include "quillen/elimination.hpp"
#include "quillen/error.hpp"

namespace quillen {

namespace {

std::vector<Poly> parse_row(const std::vector<std::string>& row, const RingPtr& ring) {
  std::vector<Poly> out;
  for (const auto& s : row) out.push_back(parse_poly(s, ring));
  return out;
}

PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const RingPtr& ring) {
  std::vector<std::vector<Poly>> out;
  for (const auto& r : rows) out.push_back(parse_row(r, ring));
  return PolyMatrix::from_rows(ring, out);
}

std::string row_string(const std::vector<Poly>& row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? ", " : "") + to_string(row[i]);
  return s + "]";
}

bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  const RingPtr& ring = a.front().ring();
  GroebnerBasis ga = groebner({ring, a}), gb = groebner({ring, b});
  for (const auto& p : a)
    if (!ideal_contains(gb, p)) return false;
  for (const auto& p : b)
    if (!ideal_contains(ga, p)) return false;
  return true;
}

bool is_e1(const std::vector<Poly>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != Poly::constant(row[i].ring(), i == 0 ? 1 : 0)) return false;
  return true;
}

bool is_sign(const Poly& p) { return p.is_constant() && (p.constant_term() == 1 || p.constant_term() == -1); }

// d equals target up to a unit of ZZ.
bool up_to_sign(const Poly& d, const Poly& target) { return d == target || d == -target; }

}  // namespace

std::vector<FixtureCheck> run_worked_session() {
  std::vector<FixtureCheck> out;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    FixtureCheck c{name, false, {}};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
      if (c.passed) c.detail = "ok";
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };

  const RingPtr S = make_ring(CoeffKind::Z, {"x", "y"});
  const auto f0 = parse_row({"x^2", "2*y + 1", "x^5*y^2 + y"}, S);
  const auto f = parse_row({"y^2", "2*x + 1", "x^2*y^5 + x"}, S);
  const BaseRing base(S, 1);
  const RingPtr A = base.base();
  const Poly one = Poly::constant(S, 1);

  check("is_unimodular(f)", [&]() -> std::string {
    return is_unimodular(PolyMatrix::from_rows(S, {f0})) ? "" : "row reported as not unimodular";
  });

  check("change_var swaps x and y with U1 = I", [&]() -> std::string {
    ChangeVarResult cv = change_var(f0, 2);
    if (cv.U1 != PolyMatrix::identity(S, 3)) return "U1 is not the identity";
    if (cv.subs.forward() != parse_row({"y", "x"}, S)) return "substitution is not the swap";
    if (cv.row != f) return "normalized row " + row_string(cv.row);
    return "";
  });

  std::optional<MaxIdeal> m1, m2;
  std::optional<LocalSolution> L1, L2;
  check("max ideal of (0) in ZZ[x] is (2, x)", [&]() -> std::string {
    m1 = get_max_ideal({A, {}});
    return same_ideal(m1->gens, parse_row({"2", "x"}, A)) ? "" : "got " + row_string(m1->gens);
  });
  check("horrocks at (2, x): f L = e1, denominator 2x+1", [&]() -> std::string {
    if (!m1) return "no maximal ideal";
    L1 = horrocks(f, 1, *m1);
    std::vector<Poly> prod = row_times(f, L1->numerator);
    if (prod[0] != L1->entry_den || !prod[1].is_zero() || !prod[2].is_zero()) return "f L is not e1";
    if (in_max_ideal(base.to_base(L1->denominator), *m1)) return "denominator lies in m";
    return up_to_sign(L1->denominator, parse_poly("2*x + 1", S)) ? "" : "denominator " + to_string(L1->denominator);
  });
  check("max ideal containing 2x+1 is (3, x-1)", [&]() -> std::string {
    m2 = get_max_ideal({A, {parse_poly("2*x + 1", A)}});
    return same_ideal(m2->gens, parse_row({"3", "x - 1"}, A)) ? "" : "got " + row_string(m2->gens);
  });
  check("horrocks at (3, x-1): f L = e1, denominator x", [&]() -> std::string {
    if (!m2) return "no maximal ideal";
    L2 = horrocks(f, 1, *m2);
    std::vector<Poly> prod = row_times(f, L2->numerator);
    if (prod[0] != L2->entry_den || !prod[1].is_zero() || !prod[2].is_zero()) return "f L is not e1";
    if (in_max_ideal(base.to_base(L2->denominator), *m2)) return "denominator lies in m";
    return up_to_sign(L2->denominator, parse_poly("x", S)) ? "" : "denominator " + to_string(L2->denominator);
  });
  check("denominators generate ZZ[x]", [&]() -> std::string {
    if (!L1 || !L2) return "local solutions missing";
    auto cert = one_certificate({A, {base.to_base(L1->denominator), base.to_base(L2->denominator)}});
    return cert ? "" : "denominators generate a proper ideal";
  });

  PatchResult patched{PolyMatrix::identity(S, 3), 0, {}};
  check("patch: f U = [0, 2x+1, x]", [&]() -> std::string {
    if (!L1 || !L2) return "local solutions missing";
    patched = patch({*L1, *L2}, 1);
    std::vector<Poly> prod = row_times(f, patched.U);
    return prod == parse_row({"0", "2*x + 1", "x"}, S) ? "" : "f U = " + row_string(prod);
  });
  check("patch matrix", [&]() -> std::string {
    const PolyMatrix expected = parse_matrix({{"-32*x^6*y^5 + 1", "0", "8*x^5*y^3"},
                                              {"16*x^5*y^7 - 8*x^4*y^7 + 4*x^3*y^7 + 2*x*y^2 - y^2", "1",
                                               "-4*x^4*y^5 + 2*x^3*y^5 - x^2*y^5"},
                                              {"-4*x*y^2", "0", "1"}},
                                             S);
    return patched.U == expected ? "" : "U = " + patched.U.str();
  });

  check("qs_row: f V = [1, 0, 0], det V = +-1", [&]() -> std::string {
    UnimodSolution sol = qs_row(f);
    if (!is_e1(sol.certificate.row(0))) return "f V = " + row_string(sol.certificate.row(0));
    return is_sign(sol.det_V) ? "" : "det V = " + to_string(sol.det_V);
  });
  check("complete_matrix: first row f, det C = +-1", [&]() -> std::string {
    PolyMatrix C = complete_matrix(PolyMatrix::from_rows(S, {f}));
    if (C.row(0) != f) return "first row " + row_string(C.row(0));
    Poly det = determinant(C);
    return is_sign(det) ? "" : "det C = " + to_string(det);
  });

  const PolyMatrix F0 = PolyMatrix::from_rows(S, {f0});
  const PolyMatrix K = parse_matrix({{"2*y + 1", "2*x^3*y^3 + x^3*y^2", "2*x^5*y^2 - 1", "-x^5*y^2 - y"},
                                     {"-x^2", "y", "x^2", "0"},
                                     {"0", "-2*y - 1", "-2*x^2", "x^2"}},
                                    S);
  check("ker f is projective of rank 2", [&]() -> std::string {
    // ker f = coker of a right inverse of f.
    auto r = projective_rank(right_inverse(F0));
    if (!r) return "not projective";
    return *r == 2 ? "" : "rank " + std::to_string(*r);
  });
  check("qs_isomorphism: W B = I_2", [&]() -> std::string {
    FreeBasis iso = qs_isomorphism(F0);
    return iso.W * iso.B == PolyMatrix::identity(S, 2) ? "" : "W B is not the identity";
  });
  check("compute_free_basis: 3x2 B, f B = 0, W B = I_2, image B = ker f", [&]() -> std::string {
    FreeBasis fb = compute_free_basis(F0);
    if (fb.B.rows() != 3 || fb.B.cols() != 2) return "B has the wrong shape";
    if (!(F0 * fb.B).is_zero()) return "f B is not zero";
    if (fb.W * fb.B != PolyMatrix::identity(S, 2)) return "W B is not the identity";
    if (!(F0 * K).is_zero()) return "kernel generators do not lie in ker f";
    if (fb.B * (fb.W * K) != K) return "kernel generators are not in the image of B";
    return "";
  });
  return out;
}

}  // namespace quillen
