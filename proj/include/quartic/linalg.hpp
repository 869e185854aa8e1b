// Exact linear algebra: GF(2) elimination on bit rows, fraction-free
// (Bareiss) elimination for integer matrices, plain exact elimination for
// rational matrices. Pivots are always the first nonzero entry in column
// order, so every result is deterministic.
#pragma once

#include "quartic/matrix.hpp"

namespace quartic {

int gf2_rank(const Gf2Matrix& m);
int gf2_nullity(const Gf2Matrix& m);
// Throws Error when m is singular or not square.
Gf2Matrix gf2_inverse(const Gf2Matrix& m);
bool gf2_row_space_equal(const Gf2Matrix& a, const Gf2Matrix& b);

// Fraction-free elimination; exact integer arithmetic throughout.
int rat_rank(const IntMatrix& m);
Int rat_det(const IntMatrix& m);

// Rational elimination.
int rat_rank(const RatMatrix& m);
Rat rat_det(const RatMatrix& m);
// Throws Error when m is singular or not square.
RatMatrix rat_inverse(const RatMatrix& m);
RatMatrix rat_inverse(const IntMatrix& m);

// Row spaces compared by rank stacking: equal iff rank(a) = rank(b) =
// rank(a over b). Column ids must agree.
bool row_space_equal(const IntMatrix& a, const IntMatrix& b);
bool row_space_equal(const RatMatrix& a, const RatMatrix& b);

}  // namespace quartic
