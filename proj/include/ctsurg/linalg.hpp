#pragma once

// Exact linear algebra on symmetric integer matrices: signature by
// congruence diagonalization over the rationals, linear solves over the
// rationals, and fraction-free determinants. Quarter-integer invariants
// downstream make floating point unusable here.

#include "ctsurg/exact.hpp"

namespace ctsurg {

// Signature (#positive - #negative pivots) of a symmetric matrix, computed
// by congruence diagonalization with symmetric pivoting; an all-zero
// diagonal block is reduced through its off-diagonal 2x2 hyperbolic blocks,
// each contributing +1 and -1.
int signature(const IntMatrix& Q);
int signature(const RatMatrix& Q);

// Solution of A x = b over the rationals; throws input_error when A is
// singular.
RatVector solve(const RatMatrix& A, const RatVector& b);

// x . rot for the exact solution of Q x = rot; the square of the class that
// evaluates on each handle co-core as its rotation number. Singular Q means
// the boundary is not a rational homology sphere and is an error.
Rational c_squared(const IntMatrix& Q, const IntVector& rot);

// det(Q) by fraction-free (Bareiss) elimination; exact for any size.
Integer determinant(const IntMatrix& Q);

// |det Q|; 0 signals b1 > 0 (not a rational homology sphere).
Integer h1_order(const IntMatrix& Q);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

}  // namespace ctsurg
