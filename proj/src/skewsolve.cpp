#include "quasipf/skewsolve.hpp"

#include "quasipf/classical_pfaffian.hpp"
#include "quasipf/quasipfaffian.hpp"

namespace qpf {

namespace {

Matrix<RingElem> invert_or_throw(const Matrix<RingElem>& a) {
  try {
    return gauss_invert(a);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::SingularMinor, e.what());
    throw;
  }
}

}  // namespace

void SkewSystem::validate() const {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimMismatch, "coefficient matrix is not square");
  if (a.rows() == 0 || a.rows() % 2 != 0) throw Error(ErrorCode::BadInput, "system size must be even and positive");
  if (static_cast<int>(b.size()) != a.rows()) throw Error(ErrorCode::DimMismatch, "right-hand side length differs from matrix size");
  const RingSpec spec = a(0, 0).spec();
  for (const auto& e : a.entries())
    if (e.spec() != spec) throw Error(ErrorCode::TagMismatch, "mixed ring tags in matrix");
  for (const auto& e : b)
    if (e.spec() != spec) throw Error(ErrorCode::TagMismatch, "right-hand side ring differs from matrix");
  if (!is_skew(a)) throw Error(ErrorCode::BadInput, "coefficient matrix is not skew under the involution");
}

std::vector<RingElem> solve_direct(const SkewSystem& sys) {
  sys.validate();
  const Matrix<RingElem> inv = invert_or_throw(sys.a);
  const int n = sys.size();
  std::vector<RingElem> x;
  for (int i = 0; i < n; ++i) {
    RingElem s = RingElem::zero(sys.b[0].spec());
    for (int k = 0; k < n; ++k) s = s + inv(i, k) * sys.b[k];
    x.push_back(s);
  }
  return x;
}

std::vector<RingElem> solve_qpf(const SkewSystem& sys) {
  sys.validate();
  TableOracle<RingElem> o(sys.a, sys.b);
  o.set_c_row(CRow::Skew);
  const int n = sys.size();
  QuasiPfaffian<RingElem> pf(o, body_range(1, n));
  std::vector<RingElem> x;
  for (int i = 1; i <= n; ++i) x.push_back(pf(Label::c(i), Label::b()));
  return x;
}

std::vector<RingElem> solve_quasidet(const SkewSystem& sys) {
  sys.validate();
  const int n = sys.size();
  const RingElem zero = RingElem::zero(sys.b[0].spec());
  const RingElem one = RingElem::one(sys.b[0].spec());
  std::vector<RingElem> x;
  for (int i = 0; i < n; ++i) {
    Matrix<RingElem> m(n + 1, n + 1, zero);
    m.set_block(0, 0, sys.a);
    for (int k = 0; k < n; ++k) m(k, n) = sys.b[k];
    m(n, i) = one;
    x.push_back(-quasidet(m, n + 1, n + 1));
  }
  return x;
}

std::vector<RingElem> solve_jacobi(const SkewSystem& sys) {
  sys.validate();
  if (sys.a(0, 0).spec().kind != RingKind::Rational) {
    throw Error(ErrorCode::TagMismatch, "Pfaffian Cramer rule needs the rational ring");
  }
  const int n = sys.size();
  const RingElem one = RingElem::one(sys.b[0].spec());
  const RingElem den = pf_expand(sys.a, one);
  if (den.is_zero()) throw Error(ErrorCode::SingularMinor, "Pf(A) = 0");
  const RingElem den_inv = den.inverse();
  std::vector<RingElem> x;
  for (int j = 0; j < n; ++j) {
    // Labels 1..2n without j, then b.
    Matrix<RingElem> m(n, n, RingElem::zero(one.spec()));
    std::vector<int> keep;
    for (int k = 0; k < n; ++k)
      if (k != j) keep.push_back(k);
    for (int p = 0; p < n - 1; ++p) {
      for (int q = 0; q < n - 1; ++q) m(p, q) = sys.a(keep[p], keep[q]);
      m(p, n - 1) = sys.b[keep[p]];
      m(n - 1, p) = -sys.b[keep[p]];
    }
    RingElem v = pf_expand(m, one) * den_inv;
    // 1-based label j + 1: sign (-1)^(j+1).
    x.push_back(j % 2 == 0 ? -v : v);
  }
  return x;
}

std::vector<RingElem> solve_residual(const SkewSystem& sys, const std::vector<RingElem>& x) {
  if (static_cast<int>(x.size()) != sys.size()) throw Error(ErrorCode::DimMismatch, "solution length differs from system size");
  std::vector<RingElem> r;
  for (int i = 0; i < sys.size(); ++i) {
    RingElem s = -sys.b[i];
    for (int k = 0; k < sys.size(); ++k) s = s + sys.a(i, k) * x[k];
    r.push_back(s);
  }
  return r;
}

}  // namespace qpf
