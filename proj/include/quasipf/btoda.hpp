#pragma once

#include <vector>

#include "quasipf/matrix.hpp"
#include "quasipf/moments.hpp"
#include "quasipf/residual.hpp"

namespace qpf {

/// Non-commutative B-Toda variables at level n, • = {0..2n-1}, as exact jets
/// in t. C labels use the unit row (c_j, i) = +delta_ij.
///
///   u = Pf(•,[d1,d0])        sigma = Pf(•,[2n,d0])      sigma_t = Pf(•,[2n,d1])
///   sigma_h = Pf(•,[2n+1,d0]) sigma_th = Pf(•,[2n+1,d1])
///   v = Pf(•,[c_{2n-1},d0])  r = Pf(•,[2n,c_{2n-1}])   w = Pf(•,[c_{2n-1},d1])
///   p00 = Pf(•,[d0,d0]), s = 1 - p00
///   m = [Pf(•,[2n,2n]) Pf(•,[2n,2n+1]); Pf(•,[2n+1,2n]) Pf(•,[2n+1,2n+1])]
///   [A C; B D] = m^-1
///
/// The integrals int[sigma_t, sigma] dt, int(sigma_t sigma_h^T - sigma
/// sigma_th^T) dt, ... are exactly the entries of m, and int[u, u] dt is p00.
/// v, r, w exist only for n >= 1.
struct BTodaState {
  int n = 0;
  JetElem u, sigma, sigma_t, sigma_h, sigma_th;
  JetElem v, r, w;
  JetElem p00, s;
  Matrix<JetElem> m;
  JetElem A, B, C, D;
  JetElem a, b, a_t, b_t;  // a = sigma^T C + sigma_h^T D, b = sigma^T A + sigma_h^T B, tilde: sigma_t, sigma_th
  JetElem alpha, beta;     // derivative formula coefficients, n >= 1

  bool has_c_labels() const { return n >= 1; }
  /// int[sigma, sigma_t] dt = -Pf(•,[2n,2n]).
  JetElem bracket_integral() const { return -m(0, 0); }
};

/// Builds every field exactly; jets carry `order` Taylor coefficients.
/// Throws SingularMinor when the body, m, or s is not invertible.
BTodaState build_state(const MomentState& s, int n, int order = 1);

/// Residual entries of m [A C; B D] - 1 and [A C; B D] m - 1.
Residual check_abcd_inverse(const BTodaState& st);

/// u recursion, sigma_t and sigma_th formulas; `next` is the state at n + 1.
std::vector<Residual> verify_u_recursion(const BTodaState& st, const BTodaState& next);

/// sigma_h expression, dr/dt, v recursion and the alternative sigma_th
/// formula. Needs n >= 1.
std::vector<Residual> verify_v_recursion(const BTodaState& st, const BTodaState& next);

/// Compatibility of the two sigma_th formulas written in u, sigma, v, r:
///   (-r' sigma + (I v)' + sigma u') s^-1 = (sigma' - sigma u)(s^-1)' + I v' s^-1,
/// I = int[sigma, sigma_t] dt. Needs n >= 1.
Residual verify_compatibility(const BTodaState& st);

/// Commutative Hirota form with tau_{2n} = Pf(0..2n-1) and
/// tau_{2n+1} = Pf(d0, 0..2n):
///   D_t^2 tau_{2n}.tau_{2n} - 2 D_t tau_{2n-1}.tau_{2n+1}
///   D_t^2 tau_{2n+1}.tau_{2n+1} - 2 D_t tau_{2n}.tau_{2n+2}
/// Needs a rational state and n >= 1.
std::vector<Residual> verify_commutative_btoda(const MomentState& s, int n);

/// Commutative tau-function expressions of the state variables:
///   sigma = -tau_{2n+1}/tau_{2n}, v = tau_{2n-1}/tau_{2n},
///   u = r = -tau_{2n}'/tau_{2n}, sigma_t = sigma_h = -tau_{2n+1}'/tau_{2n},
///   sigma_th = -tau_{2n+1}''/tau_{2n}, m = [0 k; -k 0] with k = tau_{2n+2}/tau_{2n}.
std::vector<Residual> verify_commutative_reduction(const MomentState& s, int n);

/// Classical tau function tau_m as a jet of the given order.
JetElem tau_function(const MomentState& s, int m, int order);

}  // namespace qpf
