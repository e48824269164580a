#include "quasipf/moments.hpp"

#include <set>

namespace qpf {

void DiscreteMeasure::validate() const {
  if (nodes.empty()) throw Error(ErrorCode::BadInput, "measure has no nodes");
  if (nodes.size() != weights.size()) {
    throw Error(ErrorCode::BadInput, "measure needs one weight per node");
  }
  std::set<Rational> seen;
  for (const auto& x : nodes) {
    if (sgn(x) <= 0) throw Error(ErrorCode::BadInput, "measure nodes must be positive");
    if (!seen.insert(x).second) throw Error(ErrorCode::BadInput, "measure nodes must be distinct");
  }
  for (const auto& w : weights) {
    if (!(w.spec() == ring)) throw Error(ErrorCode::TagMismatch, "weight ring differs from measure ring");
    if (!(w.involute() == w)) {
      throw Error(ErrorCode::BadInput, "weights must be symmetric under the anti-involution");
    }
  }
}

MomentState::MomentState(DiscreteMeasure measure, Snapshot snapshot)
    : measure_(std::move(measure)), snapshot_(std::move(snapshot)) {
  measure_.validate();
  const int k_count = node_count();
  if (static_cast<int>(snapshot_.values.size()) != k_count) {
    throw Error(ErrorCode::BadInput, "snapshot needs one value per node");
  }
  for (const auto& v : snapshot_.values) {
    if (sgn(v) <= 0) throw Error(ErrorCode::BadInput, "snapshot values must be positive");
  }
  powers_.resize(k_count);
  for (int k = 0; k < k_count; ++k) {
    powers_[k].reserve(kMaxPower + 1);
    Rational p = 1;
    for (int e = 0; e <= kMaxPower; ++e) {
      powers_[k].push_back(p);
      p *= measure_.nodes[k];
    }
  }
  for (int k = 0; k < k_count; ++k) {
    node_weight_.push_back(scale(measure_.weights[k], snapshot_.values[k]));
  }
  for (int k = 0; k < k_count; ++k) {
    for (int l = 0; l < k_count; ++l) {
      pair_weight_.push_back(
          scale(measure_.weights[k] * measure_.weights[l], snapshot_.values[k] * snapshot_.values[l]));
    }
  }
}

const Rational& MomentState::power(int k, int e) const {
  if (e < 0 || e > kMaxPower) throw Error(ErrorCode::TooLarge, "moment index out of range");
  return powers_[k][e];
}

RingElem MomentState::phi(int i) const {
  RingElem s = RingElem::zero(ring());
  for (int k = 0; k < node_count(); ++k) s += scale(node_weight_[k], power(k, i));
  return s;
}

RingElem MomentState::entry_derivative(int i, int j, int m) const {
  const int n = node_count();
  RingElem s = RingElem::zero(ring());
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (k == l) continue;
      const Rational& xk = measure_.nodes[k];
      const Rational& xl = measure_.nodes[l];
      Rational c = power(k, i) * power(l, j) * (xk - xl);
      const Rational sum = xk + xl;
      if (m == 0) {
        c /= sum;
      } else {
        for (int e = 1; e < m; ++e) c *= sum;
      }
      s += scale(pair_weight_[static_cast<size_t>(k) * n + l], c);
    }
  }
  return s;
}

RingElem MomentState::entry(int i, int j) const { return entry_derivative(i, j, 0); }

JetElem MomentState::phi_jet(int i, int order) const {
  std::vector<RingElem> c;
  Rational fact = 1;
  for (int m = 0; m <= order; ++m) {
    if (m > 0) fact *= m;
    c.push_back(scale(phi(i + m), 1 / fact));
  }
  return JetElem(std::move(c));
}

JetElem MomentState::entry_jet(int i, int j, int order) const {
  std::vector<RingElem> c;
  Rational fact = 1;
  for (int m = 0; m <= order; ++m) {
    if (m > 0) fact *= m;
    c.push_back(scale(entry_derivative(i, j, m), 1 / fact));
  }
  return JetElem(std::move(c));
}

JetElem MomentOracle::zero() const { return JetElem::constant(RingElem::zero(s_->ring()), order_); }

}  // namespace qpf
