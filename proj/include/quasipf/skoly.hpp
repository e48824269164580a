#pragma once

#include <vector>

#include "quasipf/btoda.hpp"
#include "quasipf/polynomial.hpp"

namespace qpf {

using JetPoly = Poly<JetElem>;

/// One level n of the partial-skew-orthogonal family, body • = {0..2n-1}:
///   p_even  = P_{2n}     = Pf(•,[2n,x])
///   p_odd   = P_{2n-1}   = Pf(•,[d0,x])     (0 at n = 0)
///   p_tilde = Pt_{2n-1}  = Pf(•,[d1,x])
///   q       = Q_{2n+1}   = Pf(•,[2n+1,x])
///   q_tilde = Qt_{2n-1}  = Pf(•,[c_{2n-1},x]) (n >= 1)
/// Coefficient i of Pf(•,[p,x]) is Pf(•,[p,c_i]).
struct SOPLevel {
  BTodaState st;
  JetPoly p_even, p_odd, p_tilde, q, q_tilde;
  /// gamma_n = -S_{n+1}^T sigma_n^-1 and the kappa_n of the odd-anchor
  /// recurrence; set for every level that has a successor.
  JetElem gamma, kappa;
};

/// Levels 0..N+1 of the family over one moment state.
class SOPFamily {
 public:
  SOPFamily(const MomentState& s, int max_n, int order);

  int max_n() const { return max_n_; }
  int order() const { return order_; }
  const MomentState& state() const { return state_; }
  const SOPLevel& level(int n) const;

  /// P_m for -1 <= m <= 2N+2; P_{-1} = 0.
  const JetPoly& P(int m) const;

 private:
  MomentState state_;
  int max_n_;
  int order_;
  std::vector<SOPLevel> levels_;
};

/// Builds levels 0..N+1. Throws SingularMinor on a degenerate state.
SOPFamily build_family(const MomentState& s, int max_n, int order = 1);

/// <f, g> = sum_{k,l} f_k a_kl g_l^T. With g = x^i this is the left side of
/// the defining linear systems a_{m,i} + xi_{m,m-1} a_{m-1,i} + ... .
RingElem skew_inner(const Poly<RingElem>& f, const Poly<RingElem>& g, const MomentState& s);
JetElem skew_inner(const JetPoly& f, const JetPoly& g, const MomentState& s, int order);

/// For every level n of the family:
///   <P_{2n}, x^i> = 0 (i < 2n), <P_{2n-1}, x^i> = phi_i (i < 2n),
///   P_{2n} monic of degree 2n, coefficients equal the c-label quasi-Pfaffians.
std::vector<Residual> verify_orthogonality(const SOPFamily& fam);

/// Derivative formulas at level 1 <= n <= N:
///   dP_{2n}   = -sigma_t P_{2n-1} + sigma Pt_{2n-1}
///   dP_{2n-1} = u^T P_{2n-1} + S^T Pt_{2n-1}
///   dP_{2n} + alpha dP_{2n-1} = beta P_{2n-1}
///   dP_{2n+1} + gamma dP_{2n} = (three-term right side)
std::vector<Residual> verify_derivative_formulas(const SOPFamily& fam, int n);

/// (d/dt + x) relations for P_{2n}, P_{2n-1}, the Q and Qt expansions, and
/// the two spectral problems. 1 <= n <= N.
std::vector<Residual> verify_spectral(const SOPFamily& fam, int n);

/// Even- and odd-anchored six-term recurrences and the Pt_{2n+1} lemma.
/// 1 <= n <= N.
std::vector<Residual> verify_recurrences(const SOPFamily& fam, int n);

}  // namespace qpf
