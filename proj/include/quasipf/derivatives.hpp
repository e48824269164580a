#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasipf/moments.hpp"
#include "quasipf/residual.hpp"

namespace qpf {

/// Outcome of one derivative identity on one moment state. The left side is
/// the exact time derivative of a quasi-Pfaffian (jets through the inverse),
/// the right side the closed quasi-Pfaffian expression.
struct DerivativeReport {
  std::string theorem;
  std::uint64_t seed = 0;
  int n = 0;
  int i = 0;
  int j = 0;
  RingElem residual;

  bool passed() const { return residual.is_zero(); }
};

/// d/dt Pf(•,[i,j]) = Pf(•,[i+1,j]) + Pf(•,[i,j+1])
///   + Pf(•,[i,c_{2n-1}]) Pf(•,[2n,j]) - Pf(•,[i,2n]) Pf(•,[c_{2n-1},j]),
/// • = {0..2n-1}, skew c row.
DerivativeReport verify_wronskian_body(const MomentState& s, int n, int i, int j);

/// d/dt Pf(•,[i,d_j]) = Pf(•,[i+1,d_j]) - Pf(•,[i,2n]) Pf(•,[c_{2n-1},d_j])
///   + Pf(•,[i,c_{2n-1}]) Pf(•,[2n,d_j]).
DerivativeReport verify_wronskian_dlabel(const MomentState& s, int n, int i, int j);

/// d/dt Pf(•,[i,j]) = Pf(•,[i,d1]) Pf(•,[j,d0])^T - Pf(•,[i,d0]) Pf(•,[j,d1])^T.
DerivativeReport verify_gram_body(const MomentState& s, int n, int i, int j);

/// d/dt Pf(•,[i,d0]) = Pf(•,[i,d1]) (1 - Pf(•,[d0,d0])) + Pf(•,[i,d0]) Pf(•,[d1,d0]).
DerivativeReport verify_gram_dlabel(const MomentState& s, int n, int i);

/// d/dt P00 = S^T u - u^T S with P00 = Pf(•,[d0,d0]), S = 1 - P00,
/// u = Pf(•,[d1,d0]).
DerivativeReport verify_gram_commutator(const MomentState& s, int n);

/// The product u u^T - u^T u built from Pf(•,[d1,d0]); generically nonzero
/// for block weights, zero for commuting ones.
RingElem gram_commutator_bracket(const MomentState& s, int n);

/// Unit c row:
///   (a) d/dt Pf(•,[i,c]) = -Pf(•,[i,d1]) Pf(•,[c,d0])^T + Pf(•,[i,d0]) Pf(•,[c,d1])^T
///   (b) d/dt Pf(•,[c,d0]) = Pf(•,[c,d1]) (1 - Pf(•,[d0,d0])) + Pf(•,[c,d0]) Pf(•,[d1,d0])
/// with c = c_{2n-1}. Returns both reports, (a) first.
std::vector<DerivativeReport> verify_gram_c_labels(const MomentState& s, int n, int i);

/// Commutative check: d/dt Pf(0..2n-1) = Pf(0..2n-2, 2n) by classical
/// Pfaffians of jets. Requires a rational state.
RingElem verify_commutative_wronskian(const MomentState& s, int n);

}  // namespace qpf
