#include "quasipf/skoly.hpp"

#include "quasipf/quasipfaffian.hpp"

namespace qpf {

namespace {

using L = Label;

JetElem tr(const JetElem& x) { return involute(x); }
JetPoly dp(const JetPoly& p) {
  return map_coeffs(p, [](const JetElem& j) { return j.differentiate(); });
}

JetElem inv(const JetElem& x, const char* what) {
  try {
    return inverse(x);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::SingularMinor, std::string(what) + " is singular");
    throw;
  }
}

void require_inner_level(const SOPFamily& fam, int n) {
  if (n < 1 || n > fam.max_n()) throw Error(ErrorCode::BadInput, "level outside 1..N");
}

}  // namespace

SOPFamily::SOPFamily(const MomentState& s, int max_n, int order) : state_(s), max_n_(max_n), order_(order) {
  if (max_n < 0) throw Error(ErrorCode::BadInput, "N must be non-negative");
  MomentOracle o(state_, order);
  o.set_c_row(CRow::Unit);
  for (int n = 0; n <= max_n + 1; ++n) {
    SOPLevel lv;
    lv.st = build_state(state_, n, order);
    QuasiPfaffian<JetElem> pf(o, body_range(0, 2 * n));
    lv.p_even = pf.poly(L::body(2 * n));
    lv.p_odd = pf.poly(L::d(0));
    lv.p_tilde = pf.poly(L::d(1));
    lv.q = pf.poly(L::body(2 * n + 1));
    lv.q_tilde = n >= 1 ? pf.poly(L::c(2 * n - 1)) : JetPoly(o.zero());
    levels_.push_back(std::move(lv));
  }
  for (int n = 0; n <= max_n; ++n) {
    SOPLevel& c = levels_[n];
    const BTodaState& st = c.st;
    const BTodaState& nx = levels_[n + 1].st;
    c.gamma = -(tr(nx.s) * inv(st.sigma, "sigma_n"));
    c.kappa = (tr(nx.sigma) * st.D + c.gamma + c.gamma * st.sigma * st.a_t) * inv(st.a, "a_n");
  }
}

const SOPLevel& SOPFamily::level(int n) const {
  if (n < 0 || n >= static_cast<int>(levels_.size())) throw Error(ErrorCode::BadInput, "level out of range");
  return levels_[n];
}

const JetPoly& SOPFamily::P(int m) const {
  if (m < -1 || m > 2 * max_n_ + 2) throw Error(ErrorCode::BadInput, "polynomial index out of range");
  // P_{2n} and P_{2n-1} live on level n.
  const int n = (m + 1) / 2;
  return m % 2 == 0 ? levels_[n].p_even : levels_[n].p_odd;
}

SOPFamily build_family(const MomentState& s, int max_n, int order) { return SOPFamily(s, max_n, order); }

RingElem skew_inner(const Poly<RingElem>& f, const Poly<RingElem>& g, const MomentState& s) {
  RingElem r = RingElem::zero(s.ring());
  for (int k = 0; k <= f.degree(); ++k)
    for (int l = 0; l <= g.degree(); ++l) r = r + f.coeff(k) * s.entry(k, l) * g.coeff(l).involute();
  return r;
}

JetElem skew_inner(const JetPoly& f, const JetPoly& g, const MomentState& s, int order) {
  JetElem r = JetElem::constant(RingElem::zero(s.ring()), order);
  for (int k = 0; k <= f.degree(); ++k)
    for (int l = 0; l <= g.degree(); ++l) r = r + f.coeff(k) * s.entry_jet(k, l, order) * tr(g.coeff(l));
  return r;
}

std::vector<Residual> verify_orthogonality(const SOPFamily& fam) {
  const MomentState& s = fam.state();
  const int ord = fam.order();
  MomentOracle o(s, ord);
  o.set_c_row(CRow::Unit);
  const JetElem one = o.one();
  std::vector<Residual> out;
  for (int n = 0; n <= fam.max_n() + 1; ++n) {
    const SOPLevel& lv = fam.level(n);
    const std::string tag = "_n" + std::to_string(n);
    Residual even{"orthogonality_even" + tag, {}}, odd{"moment_match_odd" + tag, {}};
    for (int i = 0; i < 2 * n; ++i) {
      const JetPoly xi = JetPoly::monomial(one, i);
      even.values.push_back(skew_inner(lv.p_even, xi, s, ord).value());
      odd.values.push_back((skew_inner(lv.p_odd, xi, s, ord) - s.phi_jet(i, ord)).value());
    }
    out.push_back(std::move(even));
    out.push_back(std::move(odd));

    Residual monic{"monic" + tag, {(lv.p_even.coeff(2 * n) - one).value()}};
    if (lv.p_even.degree() > 2 * n) monic.values.push_back(lv.p_even.coeffs().back().value());
    out.push_back(std::move(monic));

    QuasiPfaffian<JetElem> pf(o, body_range(0, 2 * n));
    Residual coeff{"c_label_coefficients" + tag, {}};
    for (int i = 0; i <= 2 * n; ++i) {
      coeff.values.push_back((lv.p_even.coeff(i) - pf(L::body(2 * n), L::c(i))).value());
      coeff.values.push_back((lv.p_odd.coeff(i) - pf(L::d(0), L::c(i))).value());
    }
    out.push_back(std::move(coeff));
  }
  return out;
}

std::vector<Residual> verify_derivative_formulas(const SOPFamily& fam, int n) {
  require_inner_level(fam, n);
  const SOPLevel& c = fam.level(n);
  const SOPLevel& p = fam.level(n + 1);
  const BTodaState& st = c.st;
  const JetPoly &P0 = c.p_even, &Pm1 = c.p_odd, &Pp1 = p.p_odd;
  const JetElem ai = inv(st.a, "a_n");
  const JetElem& ga = c.gamma;
  std::vector<Residual> out;
  out.push_back(poly_residual("even_derivative", dp(P0), -st.sigma_t * Pm1 + st.sigma * c.p_tilde));
  out.push_back(poly_residual("odd_derivative", dp(Pm1), tr(st.u) * Pm1 + tr(st.s) * c.p_tilde));
  out.push_back(poly_residual("even_anchor_derivative", dp(P0) + st.alpha * dp(Pm1), st.beta * Pm1));
  out.push_back(poly_residual(
      "odd_anchor_derivative", dp(Pp1) + ga * dp(P0),
      (tr(p.st.u) - ga * st.sigma * st.a_t * ai) * Pp1 - ga * st.sigma * (st.b_t - st.a_t * ai * st.b) * P0 +
          ga * (st.sigma * st.a_t * ai - st.sigma_t) * Pm1));
  return out;
}

std::vector<Residual> verify_spectral(const SOPFamily& fam, int n) {
  require_inner_level(fam, n);
  const SOPLevel& m = fam.level(n - 1);
  const SOPLevel& c = fam.level(n);
  const SOPLevel& p = fam.level(n + 1);
  const BTodaState& st = c.st;
  const BTodaState& pr = m.st;
  const JetPoly &P0 = c.p_even, &Pm1 = c.p_odd, &Pp1 = p.p_odd, &Pm2 = m.p_even, &Pm3 = m.p_odd;
  const JetElem I = st.bracket_integral();
  const JetElem ai = inv(st.a, "a_n");
  const JetElem dam = pr.D * inv(pr.a, "a_{n-1}");
  const JetElem bm = pr.B - dam * pr.b;
  const JetPoly lhs_even = dp(P0) + P0.shifted();
  const JetPoly lhs_odd = dp(Pm1) + Pm1.shifted();
  std::vector<Residual> out;
  out.push_back(poly_residual("even_shift", lhs_even, c.q + st.r * P0 - I * c.q_tilde));
  out.push_back(poly_residual("q_expansion", c.q, ai * (Pp1 - st.b * P0 - Pm1)));
  out.push_back(poly_residual("q_tilde_expansion", p.q_tilde,
                              -(st.D * ai * Pp1 + (st.B - st.D * ai * st.b) * P0 - st.D * ai * Pm1)));
  out.push_back(poly_residual("odd_shift", lhs_odd, tr(st.v) * P0 - tr(st.sigma) * c.q_tilde));
  out.push_back(poly_residual(
      "spectral_even", lhs_even,
      ai * Pp1 + (st.r - ai * st.b) * P0 - (ai - I * dam) * Pm1 + I * bm * Pm2 - I * dam * Pm3));
  out.push_back(poly_residual(
      "spectral_odd", lhs_odd,
      tr(st.v) * P0 + tr(st.sigma) * dam * Pm1 + tr(st.sigma) * bm * Pm2 - tr(st.sigma) * dam * Pm3));
  return out;
}

std::vector<Residual> verify_recurrences(const SOPFamily& fam, int n) {
  require_inner_level(fam, n);
  const SOPLevel& m = fam.level(n - 1);
  const SOPLevel& c = fam.level(n);
  const SOPLevel& p = fam.level(n + 1);
  const BTodaState& st = c.st;
  const BTodaState& pr = m.st;
  const BTodaState& nx = p.st;
  const JetPoly &P0 = c.p_even, &Pm1 = c.p_odd, &Pp1 = p.p_odd, &Pp2 = p.p_even, &Pm2 = m.p_even,
                &Pm3 = m.p_odd;
  const JetElem I = st.bracket_integral();
  const JetElem ai = inv(st.a, "a_n");
  const JetElem dam = pr.D * inv(pr.a, "a_{n-1}");
  const JetElem bm = pr.B - dam * pr.b;
  const JetElem &al = st.alpha, &be = st.beta, &ga = c.gamma, &ka = c.kappa;
  const JetElem ias = I + al * tr(st.sigma);
  std::vector<Residual> out;
  out.push_back(poly_residual("even_anchor_recurrence", (P0 + al * Pm1).shifted(),
                              ai * Pp1 + (st.r - ai * st.b + al * tr(st.v)) * P0 - (ai + be - ias * dam) * Pm1 +
                                  ias * bm * Pm2 - ias * dam * Pm3));
  out.push_back(poly_residual("p_tilde_step", p.p_tilde, c.p_tilde + st.b_t * P0 + st.a_t * c.q));
  out.push_back(poly_residual(
      "odd_anchor_recurrence", (Pp1 + ga * P0).shifted(),
      tr(nx.v) * Pp2 + (ka - tr(nx.u)) * Pp1 + (tr(nx.sigma) * st.B + ga * (st.r + st.sigma * st.b_t) - ka * st.b) * P0 +
          (ga * st.sigma_t + ga * I * dam - ka) * Pm1 + ga * I * bm * Pm2 - ga * I * dam * Pm3));
  return out;
}

}  // namespace qpf
