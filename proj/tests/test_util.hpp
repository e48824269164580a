#pragma once

#include <vector>

#include <gtest/gtest.h>

#include "quasipf/matrix.hpp"
#include "quasipf/random.hpp"
#include "quasipf/ring.hpp"

namespace qpf::test {

inline RingElem rat(long p, long q = 1) { return RingElem(Rational(p, q)); }
inline RingElem quat(long w, long x, long y, long z) { return RingElem(Quaternion{w, x, y, z}); }
inline RingElem block2(long a, long b, long c, long d) {
  return RingElem(Block(2, {Rational(a), Rational(b), Rational(c), Rational(d)}));
}

inline const RingSpec kRational{RingKind::Rational, 1};
inline const RingSpec kQuaternion{RingKind::Quaternion, 1};
inline const RingSpec kBlock2{RingKind::Block, 2};

inline std::vector<RingSpec> all_rings() { return {kRational, kQuaternion, kBlock2}; }

inline ::testing::AssertionResult IsZero(const RingElem& e) {
  if (e.is_zero()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "nonzero: " << to_string(e);
}

inline ::testing::AssertionResult Same(const RingElem& a, const RingElem& b) {
  if ((a - b).is_zero()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << to_string(a) << " != " << to_string(b);
}

inline bool same(const Matrix<RingElem>& a, const Matrix<RingElem>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a(i, j) - b(i, j)).is_zero()) return false;
  return true;
}

inline Matrix<RingElem> lift(const Matrix<Rational>& a) {
  Matrix<RingElem> m(a.rows(), a.cols(), RingElem(Rational(0)));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  return m;
}

/// Determinant by cofactor expansion along the first row (test oracle).
inline Rational det_cofactor(const Matrix<Rational>& a) {
  const int n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational s = 0;
  for (int c = 0; c < n; ++c) {
    if (sgn(a(0, c)) == 0) continue;
    const Rational t = a(0, c) * det_cofactor(a.without(0, c));
    s += (c % 2 == 0) ? t : Rational(-t);
  }
  return s;
}

}  // namespace qpf::test

namespace qpf::test {

/// Determinant by plain Gaussian elimination over the rationals (test oracle).
inline Rational det_gauss(Matrix<Rational> a) {
  const int n = a.rows();
  Rational det = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (int c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      det = -det;
    }
    det *= a(k, k);
    for (int r = k + 1; r < n; ++r) {
      const Rational f = a(r, k) / a(k, k);
      for (int c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

}  // namespace qpf::test
