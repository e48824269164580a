#include "quasipf/btoda.hpp"

#include <gtest/gtest.h>

#include "quasipf/classical_pfaffian.hpp"
#include "test_util.hpp"

namespace qpf {
namespace {

void expect_zero(const std::vector<Residual>& rs) {
  for (const auto& r : rs) EXPECT_TRUE(r.is_zero()) << r.name;
}

// Classical tau functions from plain rational values: tau_{2n} = Pf(0..2n-1),
// tau_{2n+1} = Pf(d0, 0..2n) with (d0, i) = -phi_i.
Rational tau(const MomentState& s, int m) {
  if (m == 0) return 1;
  const bool odd = m % 2 == 1;
  const int body = odd ? m - 1 : m;
  const int size = odd ? m + 1 : m;
  Matrix<Rational> a(size, size, Rational(0));
  const int off = odd ? 1 : 0;
  for (int i = 0; i < body + (odd ? 1 : 0); ++i) {
    for (int j = 0; j < body + (odd ? 1 : 0); ++j) a(i + off, j + off) = s.entry(i, j).as_rational();
    if (odd) {
      a(0, i + 1) = -s.phi(i).as_rational();
      a(i + 1, 0) = s.phi(i).as_rational();
    }
  }
  return pf_expand(a);
}

TEST(BToda, LatticeIdentitiesBlock) {
  for (int seed = 0; seed < 3; ++seed) {
    const MomentState s = InstanceGenerator(seed).moment_state(test::kBlock2, 10);
    for (int n = 1; n <= 2; ++n) {
      const BTodaState st = build_state(s, n);
      const BTodaState next = build_state(s, n + 1);
      EXPECT_TRUE(check_abcd_inverse(st).is_zero());
      expect_zero(verify_u_recursion(st, next));
      expect_zero(verify_v_recursion(st, next));
      EXPECT_TRUE(verify_compatibility(st).is_zero());
    }
  }
}

TEST(BToda, LevelZeroState) {
  const MomentState s = InstanceGenerator(4).moment_state(test::kBlock2, 6);
  const BTodaState st = build_state(s, 0);
  EXPECT_FALSE(st.has_c_labels());
  EXPECT_TRUE(test::Same(st.sigma.value(), s.phi(0)));
  EXPECT_TRUE(st.u.value().is_zero());
  expect_zero(verify_u_recursion(st, build_state(s, 1)));
}

TEST(BToda, CommutativeReductionAgainstClassicalTaus) {
  for (int seed = 0; seed < 3; ++seed) {
    const MomentState s = InstanceGenerator(30 + seed).moment_state(test::kRational, 8);
    for (int n = 1; n <= 2; ++n) {
      expect_zero(verify_commutative_reduction(s, n));
      const BTodaState st = build_state(s, n);
      const Rational t0 = tau(s, 2 * n);
      EXPECT_EQ(st.sigma.value().as_rational(), Rational(-tau(s, 2 * n + 1) / t0));
      EXPECT_EQ(st.v.value().as_rational(), Rational(tau(s, 2 * n - 1) / t0));
      EXPECT_EQ(st.m(0, 1).value().as_rational(), Rational(tau(s, 2 * n + 2) / t0));
      EXPECT_TRUE(st.m(0, 0).value().is_zero());
      const BTodaState next = build_state(s, n + 1);
      EXPECT_EQ(next.v.value().as_rational(), Rational(tau(s, 2 * n + 1) / tau(s, 2 * n + 2)));
      for (int m = 0; m <= 2 * n + 2; ++m) EXPECT_EQ(tau_function(s, m, 0).value().as_rational(), tau(s, m)) << m;
    }
  }
}

TEST(BToda, Hirota) {
  for (int seed = 0; seed < 3; ++seed) {
    const MomentState s = InstanceGenerator(70 + seed).moment_state(test::kRational, 8);
    for (int n = 1; n <= 2; ++n) expect_zero(verify_commutative_btoda(s, n));
  }
}

TEST(BToda, HirotaOnBlockRingRejected) {
  const MomentState s = InstanceGenerator(1).moment_state(test::kBlock2, 6);
  EXPECT_THROW(verify_commutative_btoda(s, 1), Error);
}

TEST(BToda, SingularStateReported) {
  const MomentState s = InstanceGenerator(1).moment_state(test::kBlock2, 1);
  EXPECT_THROW(build_state(s, 1), Error);
}

}  // namespace
}  // namespace qpf
