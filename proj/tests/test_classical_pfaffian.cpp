#include "quasipf/classical_pfaffian.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qpf {
namespace {

Matrix<Rational> skew_from_upper(int n, const std::vector<long>& upper) {
  Matrix<Rational> a(n, n, Rational(0));
  size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = upper.at(k++);
      a(j, i) = -a(i, j);
    }
  return a;
}

TEST(PfExpand, TwoByTwo) { EXPECT_EQ(pf_expand(skew_from_upper(2, {1})), 1); }

TEST(PfExpand, CanonicalFourByFour) { EXPECT_EQ(pf_expand(skew_from_upper(4, {1, 2, 3, 4, 5, 6})), 8); }

TEST(PfExpand, EmptyAndOdd) {
  EXPECT_EQ(pf_expand(Matrix<Rational>(0, 0, Rational(0))), 1);
  EXPECT_EQ(pf_expand(Matrix<Rational>(3, 3, Rational(0))), 0);
}

TEST(PfExpand, SizeGuard) {
  try {
    pf_expand(Matrix<Rational>(14, 14, Rational(0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(PfExpand, SquareIsDeterminant) {
  for (int n = 2; n <= 8; n += 2) {
    for (int seed = 0; seed < 20; ++seed) {
      InstanceGenerator g(seed * 31 + n);
      const Matrix<Rational> a = g.skew_rational(n);
      const Rational pf = pf_expand(a);
      EXPECT_EQ(pf * pf, test::det_cofactor(a)) << "n=" << n << " seed=" << seed;
    }
  }
}

TEST(DetBareiss, MatchesEliminationOracle) {
  InstanceGenerator g(2);
  for (int k = 0; k < 20; ++k) {
    Matrix<Rational> a(5, 5, Rational(0));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = g.rational();
    EXPECT_EQ(det_bareiss(a), test::det_gauss(a));
  }
}

TEST(PfCondense, MatchesExpand) {
  for (int n : {6, 8}) {
    for (int seed = 0; seed < 250; ++seed) {
      InstanceGenerator g(seed * 7 + n);
      const Matrix<Rational> a = g.skew_rational(n);
      EXPECT_EQ(pf_condense(a), pf_expand(a));
    }
  }
}

TEST(PfCondense, TrivialCases) {
  EXPECT_EQ(pf_condense(skew_from_upper(2, {5})), 5);
  EXPECT_EQ(pf_condense(Matrix<Rational>(4, 4, Rational(0))), 0);
}

TEST(PfCondense, SparseMatrixUsesFallback) {
  // Pf(1,2) = 0 forces the matching expansion at the first divisor.
  const Matrix<Rational> a = skew_from_upper(6, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14});
  int fallbacks = 0;
  EXPECT_EQ(pf_condense(a, &fallbacks), pf_expand(a));
  EXPECT_GT(fallbacks, 0);
}

TEST(Tanner, ResidualVanishes) {
  for (int size : {4, 6, 8}) {
    for (int seed = 0; seed < 20; ++seed) {
      InstanceGenerator g(seed + 1000 * size);
      EXPECT_EQ(check_tanner(g.skew_rational(size)), 0) << size;
    }
  }
  EXPECT_THROW(check_tanner(Matrix<Rational>(2, 2, Rational(0))), Error);
}

TEST(Perk, ResidualVanishes) {
  const std::pair<int, int> shapes[] = {{2, 0}, {2, 2}, {4, 2}, {0, 4}};
  for (const auto& [m, n] : shapes) {
    for (int seed = 0; seed < 10; ++seed) {
      InstanceGenerator g(seed);
      std::vector<int> b, c;
      for (int i = 0; i <= m; ++i) b.push_back(i);
      for (int i = 0; i <= n; ++i) c.push_back(m + 1 + i);
      EXPECT_EQ(check_perk(g.skew_rational(m + n + 2), b, c), 0) << m << "," << n;
    }
  }
}

TEST(Perk, RejectsOddShapes) {
  InstanceGenerator g(1);
  EXPECT_THROW(check_perk(g.skew_rational(6), {0, 1}, {2, 3, 4, 5}), Error);
}

TEST(Cayley, EvenAndOddBorders) {
  for (int n : {2, 3, 4, 5}) {
    for (int seed = 0; seed < 10; ++seed) {
      InstanceGenerator g(seed * 13 + n);
      const Matrix<Rational> body = g.skew_rational(n - 1);
      std::vector<Rational> x, y;
      for (int i = 0; i < n - 1; ++i) {
        x.push_back(g.rational());
        y.push_back(g.rational());
      }
      const auto [lhs, rhs] = cayley_det(body, x, y, g.rational());
      EXPECT_EQ(lhs, rhs) << "n=" << n;
    }
  }
}

TEST(Cayley, EqualBordersGiveSquare) {
  InstanceGenerator g(77);
  const Matrix<Rational> body = g.skew_rational(3);
  std::vector<Rational> x;
  for (int i = 0; i < 3; ++i) x.push_back(g.rational());
  const auto [lhs, rhs] = cayley_det(body, x, x, Rational(0));
  EXPECT_EQ(lhs, rhs);
  EXPECT_GE(rhs, 0);
}

}  // namespace
}  // namespace qpf
