#pragma once

#include <optional>
#include <vector>

#include "quillen/horrocks.hpp"
#include "quillen/ideal.hpp"
#include "quillen/local.hpp"
#include "quillen/matrix.hpp"

namespace quillen {

struct NormalizationBudget {
  /// Coefficient bound for column-operation multipliers and linear shifts.
  long coeff_bound = 3;
  /// Degree bound for column-operation multipliers (ZZ search).
  unsigned multiplier_degree = 2;
  /// Candidates examined before NormalizationExhausted.
  std::size_t max_candidates = 50000;
};

struct ChangeVarResult {
  PolyMatrix U1;
  Substitution subs;
  /// subs applied to f * U1; its first entry is monic in the last active variable.
  std::vector<Poly> row;
};

/// Makes the first entry monic in variable nactive-1 using a unimodular
/// U1 and an invertible substitution of variables 0..nactive-1.
/// Errors: RowTooShort, NormalizationExhausted.
ChangeVarResult change_var(const std::vector<Poly>& f, std::size_t nactive, const NormalizationBudget& budget = {});

struct LocalLoopResult {
  std::vector<LocalSolution> solutions;
  /// Denominators in the base ring A and cofactors with sum c_i d_i = 1.
  std::vector<Poly> denominators;
  std::vector<Poly> cofactors;
};

/// Collects local solutions at maximal ideals until their denominators
/// generate the unit ideal of A. Errors: SearchExhausted, NoMonicEntry.
LocalLoopResult local_loop(const std::vector<Poly>& f, std::size_t y, const MaxIdealBudget& budget = {},
                           std::size_t max_iterations = 64);

struct PatchResult {
  /// Over S, denominator-free, det 1, f * U = f|_{y=0}.
  PolyMatrix U;
  /// Common exponent N with sum c_i d_i^N = 1.
  unsigned exponent = 0;
  std::vector<Poly> cofactors;
};

/// Quillen patching of local solutions. Errors: DenominatorsNotComaximal.
PatchResult patch(const std::vector<LocalSolution>& solutions, std::size_t y);

struct EliminationOptions {
  NormalizationBudget normalization;
  MaxIdealBudget max_ideal;
};

/// One round removing variable nactive-1.
struct EliminationRound {
  std::vector<Poly> input;
  std::size_t var = 0;
  PolyMatrix U1;
  Substitution subs;
  std::vector<LocalSolution> solutions;
  /// Patch matrix in substituted coordinates.
  PolyMatrix U2;
  /// eval_at_zero(subs(input * U1), var), in substituted coordinates.
  std::vector<Poly> output;

  /// U1 * subs^{-1}(U2): input * transform() = subs^{-1}(output).
  PolyMatrix transform() const;
};

EliminationRound eliminate_last_var(const std::vector<Poly>& f, std::size_t nactive,
                                    const EliminationOptions& options = {});

}  // namespace quillen
