#include "quasipf/btoda.hpp"

#include "quasipf/classical_pfaffian.hpp"
#include "quasipf/quasipfaffian.hpp"

namespace qpf {

namespace {

using L = Label;

JetElem d(const JetElem& x) { return x.differentiate(); }
JetElem tr(const JetElem& x) { return involute(x); }

void require_level(const BTodaState& st) {
  if (!st.has_c_labels()) throw Error(ErrorCode::BadInput, "relation needs n >= 1");
}

void require_next(const BTodaState& st, const BTodaState& next) {
  if (next.n != st.n + 1) throw Error(ErrorCode::BadInput, "second state must be at level n + 1");
}

JetElem inverse_or_throw(const JetElem& x, const char* what) {
  try {
    return inverse(x);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::SingularMinor, std::string(what) + " is singular");
    throw;
  }
}

void require_rational(const MomentState& s) {
  if (s.ring().kind != RingKind::Rational) {
    throw Error(ErrorCode::TagMismatch, "commutative reduction needs the rational ring");
  }
}

}  // namespace

BTodaState build_state(const MomentState& s, int n, int order) {
  if (n < 0) throw Error(ErrorCode::BadInput, "level n must be non-negative");
  MomentOracle o(s, order);
  o.set_c_row(CRow::Unit);
  QuasiPfaffian<JetElem> pf(o, body_range(0, 2 * n));
  const L d0 = L::d(0), d1 = L::d(1), e = L::body(2 * n), f = L::body(2 * n + 1);

  BTodaState st;
  st.n = n;
  st.u = pf(d1, d0);
  st.sigma = pf(e, d0);
  st.sigma_t = pf(e, d1);
  st.sigma_h = pf(f, d0);
  st.sigma_th = pf(f, d1);
  if (n >= 1) {
    const L c = L::c(2 * n - 1);
    st.v = pf(c, d0);
    st.r = pf(e, c);
    st.w = pf(c, d1);
  } else {
    st.v = st.r = st.w = o.zero();
  }
  st.p00 = pf(d0, d0);
  st.s = o.one() - st.p00;

  st.m = Matrix<JetElem>(2, 2, o.zero());
  st.m(0, 0) = pf(e, e);
  st.m(0, 1) = pf(e, f);
  st.m(1, 0) = pf(f, e);
  st.m(1, 1) = pf(f, f);
  Matrix<JetElem> mi;
  try {
    mi = block_invert(st.m);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::Singular) throw Error(ErrorCode::SingularMinor, err.what());
    throw;
  }
  st.A = mi(0, 0);
  st.C = mi(0, 1);
  st.B = mi(1, 0);
  st.D = mi(1, 1);

  st.a = tr(st.sigma) * st.C + tr(st.sigma_h) * st.D;
  st.b = tr(st.sigma) * st.A + tr(st.sigma_h) * st.B;
  st.a_t = tr(st.sigma_t) * st.C + tr(st.sigma_th) * st.D;
  st.b_t = tr(st.sigma_t) * st.A + tr(st.sigma_th) * st.B;

  const JetElem st_inv = inverse_or_throw(tr(st.s), "1 + Pf(d0,d0)");
  inverse_or_throw(st.s, "1 - Pf(d0,d0)");
  st.alpha = -(st.sigma * st_inv);
  st.beta = -(st.sigma_t + st.sigma * st_inv * tr(st.u));
  return st;
}

Residual check_abcd_inverse(const BTodaState& st) {
  Matrix<JetElem> mi(2, 2, st.A);
  mi(0, 1) = st.C;
  mi(1, 0) = st.B;
  mi(1, 1) = st.D;
  const Matrix<JetElem> id = Matrix<JetElem>::identity(2, one_like(st.A));
  Residual r{"abcd_inverse", {}};
  for (const auto& prod : {st.m * mi - id, mi * st.m - id})
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.values.push_back(prod(i, j).value());
  return r;
}

std::vector<Residual> verify_u_recursion(const BTodaState& st, const BTodaState& next) {
  require_next(st, next);
  const JetElem si = inverse_or_throw(st.s, "1 - Pf(d0,d0)");
  std::vector<Residual> out;
  out.push_back(scalar_residual(
      "u_recursion", next.u,
      st.u + (tr(st.sigma_t) * st.A + tr(st.sigma_th) * st.B) * st.sigma +
          (tr(st.sigma_t) * st.C + tr(st.sigma_th) * st.D) * st.sigma_h));
  out.push_back(scalar_residual("sigma_tilde", st.sigma_t, (d(st.sigma) - st.sigma * st.u) * si));
  out.push_back(
      scalar_residual("sigma_tilde_hat", st.sigma_th, (d(st.sigma_h) - st.sigma_h * st.u) * si));
  return out;
}

std::vector<Residual> verify_v_recursion(const BTodaState& st, const BTodaState& next) {
  require_level(st);
  require_next(st, next);
  const JetElem integral = st.bracket_integral();
  const JetElem sti = inverse_or_throw(tr(st.s), "1 + Pf(d0,d0)");
  std::vector<Residual> out;
  out.push_back(scalar_residual("sigma_hat", st.sigma_h, d(st.sigma) - st.r * st.sigma + integral * st.v));
  out.push_back(scalar_residual(
      "r_derivative", d(st.r),
      -(st.sigma_t * tr(st.v)) + st.sigma * sti * (tr(d(st.v)) - tr(st.u) * tr(st.v))));
  out.push_back(scalar_residual(
      "v_recursion", next.v,
      (st.D * st.r - st.B) * st.sigma - st.D * d(st.sigma) - st.D * integral * st.v));
  out.push_back(scalar_residual("sigma_tilde_hat_alt", st.sigma_th,
                                d(st.sigma_t) - st.r * st.sigma_t + integral * st.w));
  return out;
}

Residual verify_compatibility(const BTodaState& st) {
  require_level(st);
  const JetElem si = inverse_or_throw(st.s, "1 - Pf(d0,d0)");
  const JetElem integral = st.bracket_integral();
  const JetElem lhs = (-(d(st.r) * st.sigma) + d(integral * st.v) + st.sigma * d(st.u)) * si;
  const JetElem rhs = (d(st.sigma) - st.sigma * st.u) * d(si) + integral * d(st.v) * si;
  return scalar_residual("compatibility", lhs, rhs);
}

JetElem tau_function(const MomentState& s, int m, int order) {
  if (m < 0) throw Error(ErrorCode::BadInput, "tau index must be non-negative");
  MomentOracle o(s, order);
  const JetElem one = o.one();
  // Odd m: labels d0, 0..m-1.
  std::vector<Label> labels;
  if (m % 2 == 1) labels.push_back(L::d(0));
  for (const auto& l : body_range(0, m)) labels.push_back(l);
  auto entry = [&](const L& p, const L& q) { return o.entry(p, q); };
  return pf_expand(labelled_matrix(labels, entry, one), one);
}

std::vector<Residual> verify_commutative_btoda(const MomentState& s, int n) {
  require_rational(s);
  if (n < 1) throw Error(ErrorCode::BadInput, "Hirota form needs n >= 1");
  constexpr int kOrder = 2;
  auto hirota = [&](int m, const char* name) {
    const JetElem t = tau_function(s, m, kOrder);
    const JetElem lo = tau_function(s, m - 1, kOrder);
    const JetElem hi = tau_function(s, m + 1, kOrder);
    // D_t^2 t.t = 2 (t'' t - t'^2), D_t f.g = f' g - f g'.
    const JetElem two = scalar_like(t, 2);
    const JetElem lhs = two * (d(d(t)) * t - d(t) * d(t));
    const JetElem rhs = two * (d(lo) * hi - lo * d(hi));
    return scalar_residual(name, lhs, rhs);
  };
  return {hirota(2 * n, "hirota_even"), hirota(2 * n + 1, "hirota_odd")};
}

std::vector<Residual> verify_commutative_reduction(const MomentState& s, int n) {
  require_rational(s);
  if (n < 1) throw Error(ErrorCode::BadInput, "reduction table needs n >= 1");
  constexpr int kOrder = 2;
  const BTodaState st = build_state(s, n, kOrder);
  const JetElem t0 = tau_function(s, 2 * n, kOrder + 1);
  const JetElem t1 = tau_function(s, 2 * n + 1, kOrder + 1);
  const JetElem tm = tau_function(s, 2 * n - 1, kOrder);
  const JetElem t2 = tau_function(s, 2 * n + 2, kOrder);
  const JetElem ti = inverse_or_throw(t0, "tau_{2n}");
  const JetElem k = t2 * ti;
  const JetElem zero = zero_like(k);
  std::vector<Residual> out;
  out.push_back(scalar_residual("sigma", st.sigma, -(t1 * ti)));
  out.push_back(scalar_residual("v", st.v, tm * ti));
  out.push_back(scalar_residual("u", st.u, -(d(t0) * ti)));
  out.push_back(scalar_residual("r", st.r, -(d(t0) * ti)));
  out.push_back(scalar_residual("sigma_tilde", st.sigma_t, -(d(t1) * ti)));
  out.push_back(scalar_residual("sigma_hat", st.sigma_h, -(d(t1) * ti)));
  out.push_back(scalar_residual("sigma_tilde_hat", st.sigma_th, -(d(d(t1)) * ti)));
  out.push_back(scalar_residual("m_00", st.m(0, 0), zero));
  out.push_back(scalar_residual("m_01", st.m(0, 1), k));
  out.push_back(scalar_residual("m_10", st.m(1, 0), -k));
  out.push_back(scalar_residual("m_11", st.m(1, 1), zero));
  out.push_back(scalar_residual("A", st.A, zero));
  out.push_back(scalar_residual("D", st.D, zero));
  out.push_back(scalar_residual("C", st.C, -inverse_or_throw(k, "tau_{2n+2}")));
  out.push_back(scalar_residual("B", st.B, inverse_or_throw(k, "tau_{2n+2}")));
  return out;
}

}  // namespace qpf
