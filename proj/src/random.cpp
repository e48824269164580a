#include "quasipf/random.hpp"

#include <set>

namespace qpf {

Rational InstanceGenerator::rational() {
  const int num = uniform(-9, 9);
  const int den = uniform(1, 9);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational InstanceGenerator::positive_rational() {
  const int num = uniform(1, 9);
  const int den = uniform(1, 9);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RingElem InstanceGenerator::element(const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::Rational: return rational();
    case RingKind::Quaternion: {
      Quaternion q;
      q.w = rational();
      q.x = rational();
      q.y = rational();
      q.z = rational();
      return q;
    }
    case RingKind::Block: {
      Block b(spec.block_dim);
      for (int r = 0; r < spec.block_dim; ++r)
        for (int c = 0; c < spec.block_dim; ++c) b(r, c) = rational();
      return b;
    }
  }
  return RingElem();
}

RingElem InstanceGenerator::skew_element(const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::Rational: return Rational(0);
    case RingKind::Quaternion: {
      Quaternion q;
      q.x = rational();
      q.y = rational();
      q.z = rational();
      return q;
    }
    case RingKind::Block: {
      Block b(spec.block_dim);
      for (int r = 0; r < spec.block_dim; ++r)
        for (int c = r + 1; c < spec.block_dim; ++c) {
          b(r, c) = rational();
          b(c, r) = -b(r, c);
        }
      return b;
    }
  }
  return RingElem();
}

RingElem InstanceGenerator::symmetric_element(const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::Rational: return rational();
    case RingKind::Quaternion: return Quaternion{rational(), 0, 0, 0};
    case RingKind::Block: {
      Block b(spec.block_dim);
      for (int r = 0; r < spec.block_dim; ++r)
        for (int c = r; c < spec.block_dim; ++c) {
          b(r, c) = rational();
          b(c, r) = b(r, c);
        }
      return b;
    }
  }
  return RingElem();
}

Matrix<RingElem> InstanceGenerator::matrix(const RingSpec& spec, int rows, int cols) {
  Matrix<RingElem> m(rows, cols, RingElem::zero(spec));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = element(spec);
  return m;
}

Matrix<RingElem> InstanceGenerator::skew_matrix(const RingSpec& spec, int n) {
  Matrix<RingElem> m(n, n, RingElem::zero(spec));
  for (int r = 0; r < n; ++r) {
    m(r, r) = skew_element(spec);
    for (int c = r + 1; c < n; ++c) {
      m(r, c) = element(spec);
      m(c, r) = -m(r, c).involute();
    }
  }
  return m;
}

Matrix<Rational> InstanceGenerator::skew_rational(int n) {
  Matrix<Rational> m(n, n, Rational(0));
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      m(r, c) = rational();
      m(c, r) = -m(r, c);
    }
  return m;
}

MomentState InstanceGenerator::moment_state(const RingSpec& spec, int nodes) {
  DiscreteMeasure mu;
  mu.ring = spec;
  std::set<Rational> used;
  while (static_cast<int>(mu.nodes.size()) < nodes) {
    Rational x = positive_rational();
    if (used.insert(x).second) mu.nodes.push_back(x);
  }
  for (int k = 0; k < nodes; ++k) {
    RingElem w = symmetric_element(spec);
    while (w.is_zero()) w = symmetric_element(spec);
    mu.weights.push_back(std::move(w));
  }
  Snapshot snap;
  for (int k = 0; k < nodes; ++k) snap.values.push_back(positive_rational());
  return MomentState(std::move(mu), std::move(snap));
}

}  // namespace qpf
