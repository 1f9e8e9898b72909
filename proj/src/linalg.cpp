#include "ctsurg/linalg.hpp"

#include <vector>

namespace ctsurg {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out(v.rows());
  for (Eigen::Index i = 0; i < v.rows(); ++i) out(i) = Rational(v(i));
  return out;
}

namespace {

void symmetric_swap(RatMatrix& A, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  A.row(i).swap(A.row(j));
  A.col(i).swap(A.col(j));
}

}  // namespace

int signature(const RatMatrix& Q) {
  const Eigen::Index n = Q.rows();
  RatMatrix A = Q;
  const Rational zero(0);
  int pos = 0, neg = 0;
  Eigen::Index k = 0;
  while (k < n) {
    // Symmetric pivoting: bring a nonzero diagonal entry to position k.
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (A(i, i) != zero) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      symmetric_swap(A, k, piv);
      const Rational d = A(k, k);
      (d > zero ? pos : neg) += 1;
      // congruence clearing of row/column k: A'(i,j) = A(i,j) - A(i,k)A(j,k)/d,
      // written on the lower triangle and mirrored
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (A(i, k) == zero) continue;
        const Rational f = A(i, k) / d;
        for (Eigen::Index j = k + 1; j <= i; ++j) {
          if (A(j, k) == zero) continue;
          A(i, j) -= f * A(j, k);
          if (j != i) A(j, i) = A(i, j);
        }
      }
      ++k;
      continue;
    }
    // Trailing diagonal is all zero: reduce through an off-diagonal entry.
    Eigen::Index bi = -1, bj = -1;
    for (Eigen::Index i = k; i < n && bi < 0; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (A(i, j) != zero) {
          bi = i;
          bj = j;
          break;
        }
    if (bi < 0) break;  // zero block, contributes nothing
    symmetric_swap(A, k, bi);  // bj > bi >= k, so the entry lands in row k
    symmetric_swap(A, k + 1, bj);
    const Rational b = A(k + 1, k);
    pos += 1;
    neg += 1;  // hyperbolic block [[0, b], [b, 0]]
    // with a zero trailing diagonal the two half-steps combine to
    // A'(i,j) = A(i,j) - (A(i,k+1)A(j,k) + A(i,k)A(j,k+1))/b
    for (Eigen::Index i = k + 2; i < n; ++i) {
      const Rational f1 = A(i, k + 1) / b;
      const Rational f2 = A(i, k) / b;
      for (Eigen::Index j = k + 2; j <= i; ++j) {
        A(i, j) -= f1 * A(j, k) + f2 * A(j, k + 1);
        if (j != i) A(j, i) = A(i, j);
      }
    }
    for (Eigen::Index i = k + 2; i < n; ++i) {
      A(i, k) = A(k, i) = zero;
      A(i, k + 1) = A(k + 1, i) = zero;
    }
    k += 2;
  }
  return pos - neg;
}

int signature(const IntMatrix& Q) { return signature(to_rational(Q)); }

RatVector solve(const RatMatrix& A, const RatVector& b) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || b.rows() != n) throw input_error("solve: dimension mismatch");
  RatMatrix M = A;
  RatVector x = b;
  const Rational zero(0);
  std::vector<Eigen::Index> perm(n);
  for (Eigen::Index k = 0; k < n; ++k) perm[k] = k;

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (M(i, k) != zero) {
        piv = i;
        break;
      }
    if (piv < 0) throw input_error("boundary is not a rational homology sphere (singular linking matrix)");
    if (piv != k) {
      M.row(k).swap(M.row(piv));
      std::swap(x(k), x(piv));
    }
    const Rational d = M(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (M(i, k) == zero) continue;
      const Rational f = M(i, k) / d;
      for (Eigen::Index j = k + 1; j < n; ++j) M(i, j) -= f * M(k, j);
      x(i) -= f * x(k);
    }
  }
  for (Eigen::Index k = n; k-- > 0;) {
    Rational acc = x(k);
    for (Eigen::Index j = k + 1; j < n; ++j) acc -= M(k, j) * x(j);
    x(k) = acc / M(k, k);
  }
  return x;
}

Rational c_squared(const IntMatrix& Q, const IntVector& rot) {
  RatVector r = to_rational(rot);
  RatVector x = solve(to_rational(Q), r);
  return x.dot(r);
}

Integer determinant(const IntMatrix& Q) {
  const Eigen::Index n = Q.rows();
  if (Q.cols() != n) throw input_error("determinant: matrix must be square");
  if (n == 0) return Integer(1);
  std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) M[i][j] = Q(i, j);

  Integer prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (M[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Integer(0);
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

Integer h1_order(const IntMatrix& Q) {
  Integer d = determinant(Q);
  return d < 0 ? Integer(-d) : d;
}

}  // namespace ctsurg
