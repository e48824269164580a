#include "quasipf/skoly.hpp"

#include <gtest/gtest.h>

#include "quasipf/classical_pfaffian.hpp"
#include "quasipf/skewsolve.hpp"
#include "test_util.hpp"

namespace qpf {
namespace {

void expect_zero(const std::vector<Residual>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.is_zero()) << r.name;
}

// sum_k f_k a_{k,i}, summed here rather than through skew_inner.
RingElem pair_with_monomial(const JetPoly& f, int i, const MomentState& s) {
  RingElem acc = RingElem::zero(s.ring());
  for (int k = 0; k <= f.degree(); ++k) acc += f.coeff(k).value() * s.entry(k, i);
  return acc;
}

class Family : public ::testing::TestWithParam<RingSpec> {};

TEST_P(Family, EvenPolynomialsSolveTheirLinearSystems) {
  const MomentState s = InstanceGenerator(5).moment_state(GetParam(), 8);
  const SOPFamily fam = build_family(s, 2);
  EXPECT_EQ(fam.P(0).degree(), 0);
  EXPECT_TRUE(test::Same(fam.P(0).coeff(0).value(), RingElem::one(s.ring())));
  EXPECT_TRUE(fam.P(-1).is_zero());
  for (int n = 1; n <= 2; ++n) {
    const int m = 2 * n;
    // xi A = -a_{m, .}  <=>  A xi^T = a_{m, .}^T for skew A.
    SkewSystem sys{Matrix<RingElem>(m, m, RingElem::zero(s.ring())), {}};
    for (int k = 0; k < m; ++k) {
      for (int l = 0; l < m; ++l) sys.a(k, l) = s.entry(k, l);
      sys.b.push_back(s.entry(m, k).involute());
    }
    const auto xi = solve_direct(sys);
    const JetPoly& p = fam.P(m);
    ASSERT_EQ(p.degree(), m);
    EXPECT_TRUE(test::Same(p.coeff(m).value(), RingElem::one(s.ring())));
    for (int k = 0; k < m; ++k) EXPECT_TRUE(test::Same(p.coeff(k).value(), xi[k].involute())) << n << " " << k;
  }
}

TEST_P(Family, OrthogonalityBySummation) {
  const MomentState s = InstanceGenerator(6).moment_state(GetParam(), 8);
  const SOPFamily fam = build_family(s, 2);
  for (int n = 1; n <= 2; ++n) {
    for (int i = 0; i < 2 * n; ++i) {
      EXPECT_TRUE(test::IsZero(pair_with_monomial(fam.P(2 * n), i, s)));
      EXPECT_TRUE(test::Same(pair_with_monomial(fam.P(2 * n - 1), i, s), s.phi(i)));
    }
  }
}

TEST_P(Family, Verifiers) {
  const MomentState s = InstanceGenerator(7).moment_state(GetParam(), 10);
  const SOPFamily fam = build_family(s, 2);
  expect_zero(verify_orthogonality(fam));
  for (int n = 1; n <= 2; ++n) {
    expect_zero(verify_derivative_formulas(fam, n));
    expect_zero(verify_spectral(fam, n));
    expect_zero(verify_recurrences(fam, n));
  }
  EXPECT_THROW(verify_spectral(fam, 0), Error);
  EXPECT_THROW(verify_recurrences(fam, 3), Error);
}

INSTANTIATE_TEST_SUITE_P(Rings, Family, ::testing::Values(test::kRational, test::kBlock2));

TEST(Family, CommutativeCoefficientsArePfaffianRatios) {
  const MomentState s = InstanceGenerator(11).moment_state(test::kRational, 8);
  const SOPFamily fam = build_family(s, 2);
  for (int n = 1; n <= 2; ++n) {
    const int m = 2 * n;
    Matrix<Rational> body(m, m, Rational(0));
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) body(k, l) = s.entry(k, l).as_rational();
    const Rational den = pf_expand(body);
    for (int i = 0; i < m; ++i) {
      // Labels 0..m-1, m, c_i with (k, c_i) = delta_ki.
      Matrix<Rational> a(m + 2, m + 2, Rational(0));
      for (int k = 0; k <= m; ++k)
        for (int l = 0; l <= m; ++l) a(k, l) = s.entry(k, l).as_rational();
      a(i, m + 1) = 1;
      a(m + 1, i) = -1;
      EXPECT_EQ(fam.P(m).coeff(i).value().as_rational(), Rational(pf_expand(a) / den)) << n << " " << i;
    }
  }
}

TEST(SkewInner, SingleNodeVanishes) {
  const MomentState s = InstanceGenerator(12).moment_state(test::kBlock2, 1);
  const RingElem one = RingElem::one(s.ring());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_TRUE(test::IsZero(skew_inner(Poly<RingElem>::monomial(one, i), Poly<RingElem>::monomial(one, j), s)));
}

TEST(SkewInner, Properties) {
  const MomentState s = InstanceGenerator(8).moment_state(test::kBlock2, 5);
  InstanceGenerator g(9);
  const RingElem z = RingElem::zero(s.ring());
  Poly<RingElem> f(z, {g.element(s.ring()), g.element(s.ring()), g.element(s.ring())});
  Poly<RingElem> h(z, {g.element(s.ring()), g.element(s.ring())});
  EXPECT_TRUE(test::IsZero(skew_inner(f, h, s) + skew_inner(h, f, s).involute()));
  const Poly<RingElem> x2 = Poly<RingElem>::monomial(RingElem::one(s.ring()), 2);
  const Poly<RingElem> x3 = Poly<RingElem>::monomial(RingElem::one(s.ring()), 3);
  EXPECT_TRUE(test::Same(skew_inner(x2, x3, s), s.entry(2, 3)));
  EXPECT_TRUE(test::Same(skew_inner(f + h, x2, s), skew_inner(f, x2, s) + skew_inner(h, x2, s)));
}

TEST(Family, LevelBounds) {
  const MomentState s = InstanceGenerator(10).moment_state(test::kRational, 8);
  const SOPFamily fam = build_family(s, 1);
  EXPECT_THROW(fam.level(3), Error);
  EXPECT_THROW(fam.P(5), Error);
  EXPECT_NO_THROW(fam.P(4));
}

}  // namespace
}  // namespace qpf
