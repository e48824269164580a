#pragma once

#include <utility>
#include <vector>

#include "quasipf/matrix.hpp"

namespace qpf {

/// Largest matrix the matching expansion accepts (11!! = 10395 matchings).
inline constexpr int kMaxExpandSize = 12;

namespace detail {

template <class T>
T pf_matchings(const Matrix<T>& a, std::vector<int>& idx, const T& one) {
  if (idx.empty()) return one;
  const int first = idx.front();
  T total = zero_like(one);
  for (size_t k = 1; k < idx.size(); ++k) {
    const int partner = idx[k];
    std::vector<int> rest;
    rest.reserve(idx.size() - 2);
    for (size_t m = 1; m < idx.size(); ++m)
      if (m != k) rest.push_back(idx[m]);
    T term = a(first, partner) * pf_matchings(a, rest, one);
    if (k % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace detail

/// Pfaffian as the signed sum over perfect matchings with pairs (i1<i2),
/// (i3<i4), ... and i1<i3<...; only the strict upper triangle is read.
/// Pf of the empty matrix is `one`. Works over any commutative element type.
template <class T>
T pf_expand(const Matrix<T>& a, const T& one) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimMismatch, "Pfaffian of non-square matrix");
  if (a.rows() % 2 != 0) return zero_like(one);
  if (a.rows() > kMaxExpandSize) {
    throw Error(ErrorCode::TooLarge, "matching expansion limited to size " +
                                         std::to_string(kMaxExpandSize));
  }
  std::vector<int> idx(a.rows());
  for (int i = 0; i < a.rows(); ++i) idx[i] = i;
  return detail::pf_matchings(a, idx, one);
}

inline Rational pf_expand(const Matrix<Rational>& a) { return pf_expand(a, Rational(1)); }

/// Skew matrix on a label list: entry (p, q) = f(labels[p], labels[q]).
template <class T, class Label, class F>
Matrix<T> labelled_matrix(const std::vector<Label>& labels, F&& f, const T& proto) {
  const int n = static_cast<int>(labels.size());
  Matrix<T> m(n, n, zero_like(proto));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m(i, j) = f(labels[i], labels[j]);
  return m;
}

/// Pfaffian evaluated by recursive Tanner condensation
///   Pf(•abcd) Pf(•) = Pf(•ab)Pf(•cd) - Pf(•ac)Pf(•bd) + Pf(•ad)Pf(•bc),
/// memoised over label subsets. Nodes whose divisor Pf(•) vanishes are
/// evaluated by the matching expansion instead.
Rational pf_condense(const Matrix<Rational>& a, int* expand_fallbacks = nullptr);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational det_bareiss(const Matrix<Rational>& a);

/// Residual of the four-index bilinear identity on labels
/// (•, a1..a4) = (1..size); the body is the first size-4 labels.
Rational check_tanner(const Matrix<Rational>& a);

/// Residual of the compound Pfaffian identity
///   sum_j (-1)^j Pf(b \ b_j) Pf(b_j, c) - sum_k (-1)^k Pf(b, c_k) Pf(c \ c_k)
/// with `b_labels` and `c_labels` 0-based indices into `a` (odd counts).
Rational check_perk(const Matrix<Rational>& a, const std::vector<int>& b_labels,
                    const std::vector<int>& c_labels);

/// Both sides of the bordered determinant / Pfaffian product formula.
/// `body` is the skew matrix on labels 2..n, `x_row[i]` = a_{x,i} and
/// `y_row[i]` = a_{y,i} (so the y column holds -a_{y,i}).
/// Even n (odd body): det[a_xy x_row; y_col body] = Pf(x,2..n) Pf(y,2..n).
/// Odd n (even body): det[0 x_row; y_col body] = Pf(x,y,2..n) Pf(2..n), with
/// Pf(x,y) = 0 and `corner` ignored.
std::pair<Rational, Rational> cayley_det(const Matrix<Rational>& body,
                                         const std::vector<Rational>& x_row,
                                         const std::vector<Rational>& y_row,
                                         const Rational& corner);

}  // namespace qpf
