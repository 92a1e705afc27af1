#pragma once

#include <optional>
#include <vector>

#include "quillen/matrix.hpp"
#include "quillen/poly.hpp"

namespace quillen {

struct IdealDesc {
  RingPtr ring;
  std::vector<Poly> generators;
};

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::Grevlex;
  /// Cap on processed critical pairs; exceeding it throws ResourceExceeded.
  std::size_t max_pairs = 100000;
  /// Stop as soon as a unit constant enters the basis. The result is then
  /// only guaranteed to certify 1 in I, not to be a full basis.
  bool stop_on_unit = false;
};

/// Gröbner basis (strong over ZZ) with, for every element, its expression
/// in terms of the input generators: gens[i] = sum_k cofactors[i][k] * input[k].
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::Grevlex;
  std::vector<Poly> input;
  std::vector<Poly> gens;
  std::vector<std::vector<Poly>> cofactors;
  std::size_t pairs_processed = 0;

  bool contains_unit() const;
};

GroebnerBasis groebner(const IdealDesc& ideal, const GroebnerOptions& options = {});

struct Reduction {
  Poly remainder;
  /// f = sum_i cofactors[i] * basis.gens[i] + remainder
  std::vector<Poly> cofactors;
};

Reduction reduce(const Poly& f, const GroebnerBasis& basis);

bool ideal_contains(const GroebnerBasis& basis, const Poly& f);

/// Cofactors g_i with sum g_i * generators[i] = 1, or nullopt when the
/// ideal is proper. The identity is re-expanded before returning.
std::optional<std::vector<Poly>> one_certificate(const IdealDesc& ideal, const GroebnerOptions& options = {});

/// True iff the m x m minors of an m x n matrix (m <= n) generate the unit
/// ideal. Throws ShapeError when m > n.
bool is_unimodular(const PolyMatrix& m);

/// X with M * X = I_m; throws NotUnimodular.
PolyMatrix right_inverse(const PolyMatrix& m);

/// Ideal of (n-k)-minors of an n x m presentation matrix.
IdealDesc fitting_ideal(const PolyMatrix& presentation, std::size_t k);

/// Generators all zero.
bool is_zero_ideal(const IdealDesc& ideal);
bool is_unit_ideal(const IdealDesc& ideal);

}  // namespace quillen
