#pragma once

#include <vector>

#include "quillen/local.hpp"
#include "quillen/matrix.hpp"

namespace quillen {

/// Solution of the unimodular row problem over A_m[y]:
/// f * (numerator / entry_den) = [1, 0, ..., 0].
///
/// `denominator` is the product of every distinct non-unit scalar the
/// construction divided by, so both L and L^{-1} are defined over A_d[y].
/// It lies outside m and is the element the local loop adds to its ideal.
struct LocalSolution {
  std::vector<Poly> row;
  std::size_t y = 0;
  MaxIdeal m;
  PolyMatrix numerator;
  Poly entry_den;
  Poly denominator;
  /// det(numerator); y-free and outside m.
  Poly det_numerator;

  LocalElem entry(std::size_t i, std::size_t j) const;
};

/// Optional record of the leading y-degree of the pivot entry at each round.
struct HorrocksTrace {
  std::vector<long> pivot_degrees;
};

/// Constructive Horrocks: f over S = A[y] with some entry monic in y (up to
/// a constant unit), m a maximal ideal of A = S without y.
/// Errors: NoMonicEntry, NotUnimodularLocally, RowTooShort (a length-2 row
/// whose reduction needs a third entry).
LocalSolution horrocks(const std::vector<Poly>& f, std::size_t y, const MaxIdeal& m,
                       HorrocksTrace* trace = nullptr);

}  // namespace quillen
