#include "quasipf/moments.hpp"

#include <gtest/gtest.h>

#include "quasipf/matrix.hpp"
#include "test_util.hpp"

namespace qpf {
namespace {

using test::rat;

MomentState state(std::vector<long> nodes, std::vector<RingElem> weights, std::vector<long> snap) {
  DiscreteMeasure m;
  for (long x : nodes) m.nodes.emplace_back(x);
  m.weights = std::move(weights);
  m.ring = m.weights.front().spec();
  Snapshot s;
  for (long v : snap) s.values.emplace_back(v);
  return MomentState(std::move(m), std::move(s));
}

// Direct summations, written independently of the module.
RingElem sum_phi(const MomentState& s, int i, int shift = 0) {
  const auto& m = s.measure();
  RingElem acc = RingElem::zero(s.ring());
  for (int k = 0; k < s.node_count(); ++k) {
    Rational c = s.snapshot().values[k];
    for (int e = 0; e < i + shift; ++e) c *= m.nodes[k];
    acc += RingElem::scalar(s.ring(), c) * m.weights[k];
  }
  return acc;
}

// sum x_k^i x_l^j (x_k - x_l) f(x_k + x_l) W_k W_l v_k v_l with f = 1/y or y^(m-1).
RingElem sum_entry(const MomentState& s, int i, int j, int m) {
  const auto& ms = s.measure();
  RingElem acc = RingElem::zero(s.ring());
  for (int k = 0; k < s.node_count(); ++k) {
    for (int l = 0; l < s.node_count(); ++l) {
      const Rational& xk = ms.nodes[k];
      const Rational& xl = ms.nodes[l];
      Rational c = (xk - xl) * s.snapshot().values[k] * s.snapshot().values[l];
      for (int e = 0; e < i; ++e) c *= xk;
      for (int e = 0; e < j; ++e) c *= xl;
      if (m == 0) {
        c /= xk + xl;
      } else {
        for (int e = 1; e < m; ++e) c *= xk + xl;
      }
      acc += RingElem::scalar(s.ring(), c) * ms.weights[k] * ms.weights[l];
    }
  }
  return acc;
}

TEST(Moments, SingleNodeUnitWeight) {
  const MomentState s = state({1}, {rat(1)}, {1});
  for (int i = 0; i < 6; ++i) EXPECT_EQ(s.phi(i), rat(1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_TRUE(test::IsZero(s.entry(i, j)));
}

TEST(Moments, TwoNodes) {
  const MomentState s = state({1, 2}, {rat(1), rat(1)}, {1, 1});
  EXPECT_EQ(s.phi(1), rat(3));
  EXPECT_EQ(s.phi(2), rat(5));
  EXPECT_TRUE(test::IsZero(s.entry(0, 0)));
  // (1-2)/3 * 2 + (2-1)/3 * 1
  EXPECT_EQ(s.entry(0, 1), rat(-1, 3));
  EXPECT_EQ(s.entry(1, 0), rat(1, 3));
}

TEST(Moments, BlockStateMatchesDirectSums) {
  for (int seed = 0; seed < 5; ++seed) {
    const MomentState s = InstanceGenerator(seed).moment_state(test::kBlock2, 4);
    for (int i = 0; i <= 8; ++i) {
      EXPECT_TRUE(test::Same(s.phi(i), sum_phi(s, i)));
      EXPECT_TRUE(test::Same(s.phi(i).involute(), sum_phi(s, i).involute()));
      for (int j = 0; j <= 8; ++j) {
        EXPECT_TRUE(test::Same(s.entry(i, j), sum_entry(s, i, j, 0)));
        EXPECT_TRUE(test::IsZero(s.entry(i, j) + s.entry(j, i).involute()));
      }
    }
  }
}

TEST(Moments, WronskianAndGrammianRules) {
  for (int seed = 0; seed < 4; ++seed) {
    const MomentState s = InstanceGenerator(100 + seed).moment_state(test::kBlock2, 4);
    for (int i = 0; i <= 8; ++i) {
      EXPECT_TRUE(test::Same(s.phi_jet(i, 1).derivative(1), s.phi(i + 1)));
      for (int j = 0; j <= 8; ++j) {
        const RingElem d = s.entry_derivative(i, j, 1);
        EXPECT_TRUE(test::Same(d, sum_entry(s, i, j, 1)));
        EXPECT_TRUE(test::Same(d, s.entry(i + 1, j) + s.entry(i, j + 1)));
        EXPECT_TRUE(test::Same(d, s.phi(i + 1) * s.phi(j).involute() - s.phi(i) * s.phi(j + 1).involute()));
        EXPECT_TRUE(test::Same(s.entry_jet(i, j, 2).derivative(2), sum_entry(s, i, j, 2)));
      }
    }
  }
}

TEST(Moments, EntryIsItsOwnAntiderivative) {
  // With zero integration constant, a_ij = sum of (d a)/(x_k + x_l) terms; re-differentiating
  // the entry table twice recovers the second-order Wronskian rule.
  const MomentState s = InstanceGenerator(3).moment_state(test::kBlock2, 5);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_TRUE(test::Same(s.entry_derivative(i, j, 2),
                             s.entry(i + 2, j) + s.entry(i + 1, j + 1) * RingElem::scalar(s.ring(), 2) +
                                 s.entry(i, j + 2)));
}

TEST(Moments, JetInverseDerivative) {
  const MomentState s = InstanceGenerator(11).moment_state(test::kBlock2, 6);
  Matrix<JetElem> a(4, 4, s.entry_jet(0, 0, 1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = s.entry_jet(i, j, 1);
  const Matrix<JetElem> ai = gauss_invert(a);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      RingElem acc = RingElem::zero(s.ring());
      for (int k = 0; k < 4; ++k)
        acc += ai(i, k).derivative(1) * a(k, j).value() + ai(i, k).value() * a(k, j).derivative(1);
      EXPECT_TRUE(test::IsZero(acc));
    }
  }
}

TEST(Moments, Validation) {
  EXPECT_THROW(state({1, 1}, {rat(1), rat(1)}, {1, 1}), Error);
  EXPECT_THROW(state({0, 1}, {rat(1), rat(1)}, {1, 1}), Error);
  EXPECT_THROW(state({1, 2}, {rat(1), rat(1)}, {1, 0}), Error);
  EXPECT_THROW(state({1, 2}, {rat(1)}, {1, 1}), Error);
  EXPECT_THROW(state({1}, {test::block2(1, 2, 3, 4)}, {1}), Error);
  EXPECT_NO_THROW(state({1}, {test::block2(1, 2, 2, 4)}, {1}));
}

}  // namespace
}  // namespace qpf
