#pragma once

#include <vector>

#include "quasipf/matrix.hpp"
#include "quasipf/ring.hpp"

namespace qpf {

/// A x = b with A skew under the anti-involution (A^T = -A), size 2n.
struct SkewSystem {
  Matrix<RingElem> a;
  std::vector<RingElem> b;

  /// Throws DimMismatch, BadInput (odd size, not skew) or TagMismatch.
  void validate() const;
  int size() const { return a.rows(); }
};

/// x = A^-1 b by Gaussian elimination.
std::vector<RingElem> solve_direct(const SkewSystem& sys);

/// x_i = Pf(1..2n, [c_i, b]) with Pf(c_i, j) = -delta_ij, Pf(j, b) = b_j,
/// Pf(c_i, b) = 0. The body is inverted by the recursive Schur scheme.
std::vector<RingElem> solve_qpf(const SkewSystem& sys);

/// x_i = -|A b; e_i^T 0| boxed at the corner.
std::vector<RingElem> solve_quasidet(const SkewSystem& sys);

/// Commutative Pfaffian Cramer rule
///   x_j = (-1)^j Pf(1..j^..2n, b) / Pf(1..2n),
/// with b bordered last, (i, b) = b_i. Rational ring only, 2n <= 10.
std::vector<RingElem> solve_jacobi(const SkewSystem& sys);

/// Entries of A x - b.
std::vector<RingElem> solve_residual(const SkewSystem& sys, const std::vector<RingElem>& x);

}  // namespace qpf
