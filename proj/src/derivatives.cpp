#include "quasipf/derivatives.hpp"

#include "quasipf/classical_pfaffian.hpp"
#include "quasipf/quasipfaffian.hpp"

namespace qpf {

namespace {

using L = Label;

constexpr int kOrder = 1;

void require_n(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "derivative formulas need n >= 1");
}

struct Frame {
  MomentOracle oracle;
  QuasiPfaffian<JetElem> pf;

  Frame(const MomentState& s, int n, CRow row)
      : oracle(make_oracle(s, row)), pf(oracle, body_range(0, 2 * n)) {}

  static MomentOracle make_oracle(const MomentState& s, CRow row) {
    MomentOracle o(s, kOrder);
    o.set_c_row(row);
    return o;
  }

  JetElem operator()(const Label& p, const Label& q) const { return pf(p, q); }
};

DerivativeReport report(const char* theorem, int n, int i, int j, const JetElem& lhs,
                        const JetElem& rhs) {
  DerivativeReport r;
  r.theorem = theorem;
  r.n = n;
  r.i = i;
  r.j = j;
  r.residual = (lhs - rhs).value();
  return r;
}

}  // namespace

DerivativeReport verify_wronskian_body(const MomentState& s, int n, int i, int j) {
  require_n(n);
  Frame f(s, n, CRow::Skew);
  const L c = L::c(2 * n - 1), top = L::body(2 * n);
  const JetElem lhs = f(L::body(i), L::body(j)).differentiate();
  const JetElem rhs = f(L::body(i + 1), L::body(j)) + f(L::body(i), L::body(j + 1)) +
                      f(L::body(i), c) * f(top, L::body(j)) -
                      f(L::body(i), top) * f(c, L::body(j));
  return report("wronskian_body", n, i, j, lhs, rhs);
}

DerivativeReport verify_wronskian_dlabel(const MomentState& s, int n, int i, int j) {
  require_n(n);
  Frame f(s, n, CRow::Skew);
  const L c = L::c(2 * n - 1), top = L::body(2 * n), d = L::d(j);
  const JetElem lhs = f(L::body(i), d).differentiate();
  const JetElem rhs = f(L::body(i + 1), d) - f(L::body(i), top) * f(c, d) +
                      f(L::body(i), c) * f(top, d);
  return report("wronskian_dlabel", n, i, j, lhs, rhs);
}

DerivativeReport verify_gram_body(const MomentState& s, int n, int i, int j) {
  require_n(n);
  Frame f(s, n, CRow::Skew);
  const L d0 = L::d(0), d1 = L::d(1), li = L::body(i), lj = L::body(j);
  const JetElem lhs = f(li, lj).differentiate();
  const JetElem rhs = f(li, d1) * involute(f(lj, d0)) - f(li, d0) * involute(f(lj, d1));
  return report("gram_body", n, i, j, lhs, rhs);
}

DerivativeReport verify_gram_dlabel(const MomentState& s, int n, int i) {
  require_n(n);
  Frame f(s, n, CRow::Skew);
  const L d0 = L::d(0), d1 = L::d(1), li = L::body(i);
  const JetElem lhs = f(li, d0).differentiate();
  const JetElem rhs = f(li, d1) * (f.oracle.one() - f(d0, d0)) + f(li, d0) * f(d1, d0);
  return report("gram_dlabel", n, i, 0, lhs, rhs);
}

DerivativeReport verify_gram_commutator(const MomentState& s, int n) {
  require_n(n);
  Frame f(s, n, CRow::Skew);
  const L d0 = L::d(0), d1 = L::d(1);
  const JetElem p00 = f(d0, d0);
  const JetElem u = f(d1, d0);
  const JetElem sk = f.oracle.one() - p00;
  const JetElem rhs = involute(sk) * u - involute(u) * sk;
  return report("gram_commutator", n, 0, 0, p00.differentiate(), rhs);
}

RingElem gram_commutator_bracket(const MomentState& s, int n) {
  require_n(n);
  Frame f(s, n, CRow::Skew);
  const RingElem u = f(L::d(1), L::d(0)).value();
  return u * u.involute() - u.involute() * u;
}

std::vector<DerivativeReport> verify_gram_c_labels(const MomentState& s, int n, int i) {
  require_n(n);
  Frame f(s, n, CRow::Unit);
  const L d0 = L::d(0), d1 = L::d(1), c = L::c(2 * n - 1), li = L::body(i);
  std::vector<DerivativeReport> out;
  {
    const JetElem lhs = f(li, c).differentiate();
    const JetElem rhs = -(f(li, d1) * involute(f(c, d0))) + f(li, d0) * involute(f(c, d1));
    out.push_back(report("gram_c_label_a", n, i, 2 * n - 1, lhs, rhs));
  }
  {
    const JetElem lhs = f(c, d0).differentiate();
    const JetElem rhs = f(c, d1) * (f.oracle.one() - f(d0, d0)) + f(c, d0) * f(d1, d0);
    out.push_back(report("gram_c_label_b", n, 2 * n - 1, 0, lhs, rhs));
  }
  return out;
}

RingElem verify_commutative_wronskian(const MomentState& s, int n) {
  require_n(n);
  if (s.ring().kind != RingKind::Rational) {
    throw Error(ErrorCode::TagMismatch, "commutative reduction needs the rational ring");
  }
  MomentOracle o(s, kOrder);
  const JetElem one = o.one();
  auto pf = [&](const std::vector<Label>& labels) {
    return pf_expand(labelled_matrix(labels, [&](const L& p, const L& q) { return o.entry(p, q); }, one),
                     one);
  };
  std::vector<Label> shifted = body_range(0, 2 * n - 1);
  shifted.push_back(L::body(2 * n));
  return (pf(body_range(0, 2 * n)).differentiate() - pf(shifted)).value();
}

}  // namespace qpf
