#pragma once

#include <vector>

#include "quillen/matrix.hpp"

namespace quillen {

/// U * A * W = D with U, W invertible and d_1 | d_2 | ... on the diagonal.
struct SNFResult {
  PolyMatrix U;
  PolyMatrix D;
  PolyMatrix W;
};

/// Smith normal form over ZZ (constant entries) or k[t] (entries in a single
/// variable over QQ or ZZ/p). Diagonal entries are nonnegative integers or
/// monic polynomials. Throws ShapeError for any other ring.
SNFResult smith_normal_form(const PolyMatrix& a);

/// V with row * V = [1, 0, ..., 0] and det V = 1 (for length >= 2), over
/// the same Euclidean rings. Throws NotUnimodular or ShapeError.
PolyMatrix solve_row_over_pid(const std::vector<Poly>& row);

/// True when the entries live in a Euclidean ring this module handles.
bool is_euclidean(const PolyMatrix& a);

}  // namespace quillen
