#pragma once

#include <vector>

#include "quasipf/jet.hpp"
#include "quasipf/labels.hpp"
#include "quasipf/ring.hpp"

namespace qpf {

/// Finite measure sum_k W_k delta_{x_k} on distinct positive nodes with
/// weights fixed by the anti-involution (W_k^T = W_k).
struct DiscreteMeasure {
  std::vector<Rational> nodes;
  std::vector<RingElem> weights;
  RingSpec ring;

  void validate() const;  // throws BadInput
};

/// Formal values v_k > 0 of exp(x_k t) at the evaluation instant, with the
/// differentiation rule d/dt v_k = x_k v_k.
struct Snapshot {
  std::vector<Rational> values;
};

/// Exact moment functions and skew inner-product entries
///   phi_i  = sum_k x_k^i W_k v_k,
///   a_ij   = sum_{k,l} x_k^i x_l^j (x_k - x_l)/(x_k + x_l) W_k W_l v_k v_l,
/// i.e. the double integral with weight exp(xt) W(x) and lower time limit
/// -infinity. Jets carry exact t-derivatives: the m-th derivative of a_ij
/// replaces 1/(x_k + x_l) by (x_k + x_l)^(m-1), and phi_i^(m) = phi_{i+m}.
class MomentState {
 public:
  MomentState(DiscreteMeasure measure, Snapshot snapshot);

  const DiscreteMeasure& measure() const { return measure_; }
  const Snapshot& snapshot() const { return snapshot_; }
  RingSpec ring() const { return measure_.ring; }
  int node_count() const { return static_cast<int>(measure_.nodes.size()); }

  RingElem phi(int i) const;
  RingElem entry(int i, int j) const;

  /// m-th time derivative of a_ij computed monomial-wise.
  RingElem entry_derivative(int i, int j, int m) const;

  JetElem phi_jet(int i, int order) const;
  JetElem entry_jet(int i, int j, int order) const;

 private:
  DiscreteMeasure measure_;
  Snapshot snapshot_;
  std::vector<std::vector<Rational>> powers_;  // powers_[k][e] = x_k^e
  std::vector<RingElem> pair_weight_;          // W_k W_l v_k v_l, row-major in (k, l)
  std::vector<RingElem> node_weight_;          // W_k v_k

  const Rational& power(int k, int e) const;
  static constexpr int kMaxPower = 64;
};

/// Entry oracle backed by a moment state: body(i, j) = a_ij, moment(k) =
/// phi_k, evaluated as jets of the given order (order 0 for plain values).
class MomentOracle final : public EntryOracle<JetElem> {
 public:
  MomentOracle(const MomentState& state, int order) : s_(&state), order_(order) {}

  JetElem zero() const override;
  JetElem body(int i, int j) const override { return s_->entry_jet(i, j, order_); }
  JetElem moment(int k) const override { return s_->phi_jet(k, order_); }

  const MomentState& state() const { return *s_; }
  int order() const { return order_; }

 private:
  const MomentState* s_;
  int order_;
};

/// Same entries as plain ring values.
class MomentValueOracle final : public EntryOracle<RingElem> {
 public:
  explicit MomentValueOracle(const MomentState& state) : s_(&state) {}

  RingElem zero() const override { return RingElem::zero(s_->ring()); }
  RingElem body(int i, int j) const override { return s_->entry(i, j); }
  RingElem moment(int k) const override { return s_->phi(k); }

 private:
  const MomentState* s_;
};

}  // namespace qpf
