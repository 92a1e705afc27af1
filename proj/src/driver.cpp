#include "quillen/driver.hpp"

#include <algorithm>

#include "quillen/error.hpp"
#include "quillen/ideal.hpp"
#include "quillen/smith.hpp"

namespace quillen {

namespace {

void require_unimodular(const PolyMatrix& M) {
  if (M.rows() > M.cols()) fail(ErrorKind::ShapeError, "more rows than columns");
  if (M.rows() == 0) fail(ErrorKind::ShapeError, "empty matrix");
  GroebnerOptions opts;
  opts.stop_on_unit = true;
  GroebnerBasis gb = groebner({M.ring(), minors(M, M.rows())}, opts);
  if (gb.contains_unit()) return;
  std::string gens;
  for (std::size_t i = 0; i < gb.gens.size() && i < 6; ++i) gens += (i ? ", " : "") + to_string(gb.gens[i]);
  if (gb.gens.size() > 6) gens += ", ...";
  fail(ErrorKind::NotUnimodular, "maximal minors generate the proper ideal (" + gens + ")");
}

PolyMatrix as_row(const std::vector<Poly>& f) { return PolyMatrix::from_rows(f.front().ring(), {f}); }

std::size_t active_vars(const std::vector<Poly>& f) {
  std::size_t k = 0;
  for (const auto& e : f) k = std::max(k, e.active_vars());
  return k;
}

std::optional<std::size_t> unit_entry(const std::vector<Poly>& f) {
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j].is_unit()) return j;
  return std::nullopt;
}

// Swap the unit to the front, scale it to 1 and clear the rest.
PolyMatrix unit_entry_solution(const std::vector<Poly>& f, std::size_t j) {
  const RingPtr& ring = f.front().ring();
  PolyMatrix V = PolyMatrix::identity(ring, f.size());
  V.swap_cols(0, j);
  const Poly inv = Poly::constant(ring, ring->inverse(f[j].constant_term()));
  if (!inv.is_one()) V.scale_col(0, inv);
  const std::vector<Poly> p = row_times(f, V);
  for (std::size_t k = 1; k < f.size(); ++k)
    if (!p[k].is_zero()) V.add_col_multiple(k, 0, -p[k]);
  return V;
}

// [[a, -g], [b, f]] for a*f + b*g = 1.
std::optional<PolyMatrix> pair_solution(const std::vector<Poly>& f, std::size_t pairs) {
  const RingPtr& ring = f.front().ring();
  if (f.size() == 1) {
    if (!f[0].is_unit()) return std::nullopt;
    return unit_entry_solution(f, 0);
  }
  GroebnerOptions opts;
  opts.max_pairs = pairs;
  auto cert = one_certificate({ring, f}, opts);
  if (!cert) return std::nullopt;
  return PolyMatrix::from_rows(ring, {{(*cert)[0], -f[1]}, {(*cert)[1], f[0]}});
}

class RowSolver {
 public:
  explicit RowSolver(const QsOptions& options) : options_(options) {}

  PolyMatrix solve(const std::vector<Poly>& f) {
    if (options_.use_shortcuts || f.size() <= 2) {
      if (auto V = shortcuts(f, options_)) {
        ++stats.shortcuts;
        return *V;
      }
    }
    const std::size_t k = active_vars(f);
    const bool field = f.front().ring()->kind() != CoeffKind::Z;
    if (k == 0 || (field && k == 1)) {
      ++stats.base_cases;
      if (auto j = unit_entry(f)) return unit_entry_solution(f, *j);
      return solve_row_over_pid(f);
    }
    EliminationRound round = eliminate_last_var(f, k, options_.elimination);
    ++stats.rounds;
    stats.local_solutions += round.solutions.size();
    const PolyMatrix W = solve(round.output);
    const Substitution back = round.subs.inverted();
    return round.U1 * (round.U2 * W).map([&](const Poly& p) { return substitute(p, back); });
  }

  QsStats stats;

 private:
  const QsOptions& options_;
};

}  // namespace

std::optional<PolyMatrix> shortcuts(const std::vector<Poly>& f, const QsOptions& options) {
  if (f.empty()) return std::nullopt;
  if (auto j = unit_entry(f)) return unit_entry_solution(f, *j);
  if (f.size() <= 2) {
    try {
      return pair_solution(f, options.shortcut_pairs);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ResourceExceeded) throw;
      return std::nullopt;
    }
  }
  const RingPtr& ring = f.front().ring();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i].is_zero() || f[j].is_zero()) continue;
      std::optional<PolyMatrix> block;
      try {
        block = pair_solution({f[i], f[j]}, options.shortcut_pairs);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ResourceExceeded) throw;
      }
      if (!block) continue;
      PolyMatrix V = PolyMatrix::identity(ring, f.size());
      V(i, i) = (*block)(0, 0);
      V(i, j) = (*block)(0, 1);
      V(j, i) = (*block)(1, 0);
      V(j, j) = (*block)(1, 1);
      const std::vector<Poly> p = row_times(f, V);
      return V * unit_entry_solution(p, i);
    }
  return std::nullopt;
}

UnimodSolution qs_row(const std::vector<Poly>& f, const QsOptions& options) {
  if (f.empty()) fail(ErrorKind::ShapeError, "empty row");
  const PolyMatrix M = as_row(f);
  require_unimodular(M);
  RowSolver solver(options);
  PolyMatrix V = solver.solve(f);
  PolyMatrix cert = M * V;
  ensure(cert == PolyMatrix::unit_block(M.ring(), 1, f.size()), "f * V is not e1");
  Poly det = determinant(V);
  ensure(det.is_unit(), "det V is not a unit");
  return {std::move(V), std::move(cert), std::move(det), solver.stats};
}

UnimodSolution qs_matrix(const PolyMatrix& M, const QsOptions& options) {
  require_unimodular(M);
  const RingPtr& ring = M.ring();
  const std::size_t m = M.rows(), n = M.cols();
  UnimodSolution first = qs_row(M.row(0), options);
  QsStats stats = first.stats;
  PolyMatrix V = first.V;
  if (m > 1) {
    const PolyMatrix M1 = M * V;
    UnimodSolution rest = qs_matrix(M1.block(1, 1, m - 1, n - 1), options);
    stats.rounds += rest.stats.rounds;
    stats.local_solutions += rest.stats.local_solutions;
    stats.shortcuts += rest.stats.shortcuts;
    stats.base_cases += rest.stats.base_cases;
    PolyMatrix D = PolyMatrix::identity(ring, n);
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t c = 0; c + 1 < n; ++c) D(r + 1, c + 1) = rest.V(r, c);
    V = V * D;
    const PolyMatrix M2 = M * V;
    for (std::size_t r = 1; r < m; ++r)
      if (!M2(r, 0).is_zero()) V.add_col_multiple(0, r, -M2(r, 0));
  }
  PolyMatrix cert = M * V;
  ensure(cert == PolyMatrix::unit_block(ring, m, n), "M * V is not [I | 0]");
  Poly det = determinant(V);
  ensure(det.is_unit(), "det V is not a unit");
  return {std::move(V), std::move(cert), std::move(det), stats};
}

PolyMatrix complete_matrix(const PolyMatrix& M, const QsOptions& options) {
  UnimodSolution sol = qs_matrix(M, options);
  PolyMatrix C = inverse_unimodular(sol.V);
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) ensure(C(r, c) == M(r, c), "completion does not extend M");
  return C;
}

namespace {

struct Splitting {
  PolyMatrix V, Vinv;
  FreeBasis basis;
};

Splitting split(const PolyMatrix& f, const QsOptions& options) {
  UnimodSolution sol = qs_matrix(f, options);
  const std::size_t m = f.rows(), n = f.cols();
  PolyMatrix Vinv = inverse_unimodular(sol.V);
  FreeBasis basis{sol.V.block(0, m, n, n - m), Vinv.block(m, 0, n - m, n)};
  ensure((f * basis.B).is_zero(), "basis does not lie in the kernel");
  ensure(basis.W * basis.B == PolyMatrix::identity(f.ring(), n - m), "W * B is not the identity");
  return {std::move(sol.V), std::move(Vinv), std::move(basis)};
}

}  // namespace

FreeBasis compute_free_basis(const PolyMatrix& f, const QsOptions& options) { return split(f, options).basis; }

FreeBasis qs_isomorphism(const PolyMatrix& f, const QsOptions& options) {
  Splitting s = split(f, options);
  const std::size_t m = f.rows(), n = f.cols();
  // I - B W factors through the first m columns of V.
  const PolyMatrix rest = PolyMatrix::identity(f.ring(), n) - s.basis.B * s.basis.W;
  ensure(rest == s.V.block(0, 0, n, m) * s.Vinv.block(0, 0, m, n), "B * W is not the identity on ker f");
  return s.basis;
}

std::optional<std::size_t> projective_rank(const PolyMatrix& P) {
  const std::size_t n = P.rows();
  for (std::size_t r = 0; r <= n; ++r) {
    if (!is_unit_ideal(fitting_ideal(P, r))) continue;
    if (r == 0 || is_zero_ideal(fitting_ideal(P, r - 1))) return r;
    return std::nullopt;
  }
  return std::nullopt;
}

bool is_projective(const PolyMatrix& P) { return projective_rank(P).has_value(); }

}  // namespace quillen
