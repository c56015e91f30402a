#pragma once

#include "simplexlab/matrix.hpp"

namespace simplexlab {

// Hermite normal form, row-operation convention:
//
//   u * m == h,  u unimodular,
//   h lower-triangular: h(i,j) == 0 for j > i, h(j,j) > 0,
//   off-diagonal entries reduced: 0 <= h(i,j) < h(j,j) for i > j,
//   rows beyond the column count are zero for tall inputs.
//
// Requires full column rank (throws std::invalid_argument otherwise). The
// convention is load-bearing: canonical lattice bases, coset enumeration
// order and lattice equality all derive from it, so it must not change.
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
};
HermiteResult hermite_normal_form(const IntMatrix& m);

// Smith normal form: u * m * v == s with s diagonal, s(i,i) >= 0,
// s(i,i) | s(i+1,i+1), zero entries trailing; u and v unimodular.
// Accepts any integer matrix, including rectangular and zero.
struct SmithResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};
SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace simplexlab
