#pragma once

#include <optional>
#include <vector>

#include "quillen/elimination.hpp"
#include "quillen/matrix.hpp"

namespace quillen {

struct QsOptions {
  /// Off forces elimination wherever it can run; rows of length <= 2 still
  /// use the certificate completion.
  bool use_shortcuts = true;
  /// Pair cap for the pairwise certificate search in the shortcut pass.
  std::size_t shortcut_pairs = 2000;
  EliminationOptions elimination;
};

struct QsStats {
  std::size_t rounds = 0;
  std::size_t local_solutions = 0;
  std::size_t shortcuts = 0;
  std::size_t base_cases = 0;
};

/// M * V = [I | 0] with det V a unit.
struct UnimodSolution {
  PolyMatrix V;
  PolyMatrix certificate;
  Poly det_V;
  QsStats stats;
};

/// Shortcut set: unit entry; rows of length <= 2 through a certificate;
/// two comaximal entries folded into a unit entry. Absent when none applies.
std::optional<PolyMatrix> shortcuts(const std::vector<Poly>& f, const QsOptions& options = {});

/// Errors: NotUnimodular, SearchExhausted, NormalizationExhausted.
UnimodSolution qs_row(const std::vector<Poly>& f, const QsOptions& options = {});
/// Errors: NotUnimodular, ShapeError.
UnimodSolution qs_matrix(const PolyMatrix& M, const QsOptions& options = {});

/// Square C with det a unit whose first m rows are M.
PolyMatrix complete_matrix(const PolyMatrix& M, const QsOptions& options = {});

/// B: columns m+1..n of V, a free basis of ker f. W: rows m+1..n of V^{-1},
/// with W * B = I.
struct FreeBasis {
  PolyMatrix B;
  PolyMatrix W;
};

FreeBasis compute_free_basis(const PolyMatrix& f, const QsOptions& options = {});
/// The pair (B, W) of compute_free_basis, checked as mutually inverse on ker f.
FreeBasis qs_isomorphism(const PolyMatrix& f, const QsOptions& options = {});

/// r with Fitt_r(P) = (1) and Fitt_{r-1}(P) = (0), the rank of coker P.
std::optional<std::size_t> projective_rank(const PolyMatrix& P);
/// coker P is projective: some r has Fitt_r = (1) and Fitt_{r-1} = (0).
bool is_projective(const PolyMatrix& P);

}  // namespace quillen
