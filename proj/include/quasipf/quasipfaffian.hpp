#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "quasipf/labels.hpp"
#include "quasipf/matrix.hpp"

namespace qpf {

template <class T>
Matrix<T> body_matrix(const EntryOracle<T>& o, const std::vector<Label>& body) {
  const int n = static_cast<int>(body.size());
  Matrix<T> a(n, n, o.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = o.entry(body[i], body[j]);
  return a;
}

/// Quasi-Pfaffians Pf(•, [p, q]) sharing one body •. The body matrix is
/// inverted once (recursive Schur scheme, elimination fallback) and every
/// boxed pair is then
///   entry(p, q) - sum_{k,l} entry(p, •_k) (A^-1)_{kl} entry(•_l, q).
template <class T>
class QuasiPfaffian {
 public:
  QuasiPfaffian(const EntryOracle<T>& oracle, std::vector<Label> body)
      : o_(&oracle), body_(std::move(body)) {
    if (body_.size() % 2 != 0) {
      throw Error(ErrorCode::BadInput, "quasi-Pfaffian body must have even length");
    }
    if (!body_.empty()) {
      try {
        inv_ = block_invert(body_matrix(oracle, body_), &stats_);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::SingularMinor, e.what());
        throw;
      }
    }
  }

  const std::vector<Label>& body() const { return body_; }
  const Matrix<T>& inverse() const { return inv_; }
  const InvertStats& stats() const { return stats_; }

  T operator()(const Label& p, const Label& q) const {
    T value = o_->entry(p, q);
    if (body_.empty()) return value;
    const std::vector<T> w = weights(p);
    for (size_t l = 0; l < body_.size(); ++l) value -= w[l] * o_->entry(body_[l], q);
    return value;
  }

  /// Pf(•, [p, x]) with entry(i, x) = x^i.
  Poly<T> poly(const Label& p) const {
    Poly<T> value = o_->x_entry(p);
    if (body_.empty()) return value;
    const std::vector<T> w = weights(p);
    for (size_t l = 0; l < body_.size(); ++l) value = value - w[l] * o_->x_entry(body_[l]);
    return value;
  }

 private:
  // Row vector entry(p, •) A^-1.
  std::vector<T> weights(const Label& p) const {
    const int n = static_cast<int>(body_.size());
    std::vector<T> row;
    row.reserve(n);
    for (const auto& b : body_) row.push_back(o_->entry(p, b));
    std::vector<T> w;
    w.reserve(n);
    for (int l = 0; l < n; ++l) {
      T s = row[0] * inv_(0, l);
      for (int k = 1; k < n; ++k) s += row[k] * inv_(k, l);
      w.push_back(std::move(s));
    }
    return w;
  }

  const EntryOracle<T>* o_;
  std::vector<Label> body_;
  Matrix<T> inv_;
  InvertStats stats_;
};

template <class T>
T qpf_direct(const EntryOracle<T>& o, const std::vector<Label>& body, const Label& p, const Label& q) {
  return QuasiPfaffian<T>(o, body)(p, q);
}

/// Quasi-Pfaffian by repeated use of the heredity identity
///   Pf(•,a,b,[c,d]) = Pf(•,[c,d])
///       - (Pf(•,[c,a]) Pf(•,[c,b])) M^-1 (Pf(•,[a,d]); Pf(•,[b,d])),
///   M = [Pf(•,[a,a]) Pf(•,[a,b]); Pf(•,[b,a]) Pf(•,[b,b])],
/// stripping the last two body labels at each level. Lower-order values are
/// memoised by (prefix length, boxed pair), so only the 2x2 matrices M are
/// ever inverted. Throws SingularMinor when some M is not invertible.
template <class T>
class Condensation {
 public:
  Condensation(const EntryOracle<T>& oracle, std::vector<Label> body)
      : o_(&oracle), body_(std::move(body)) {
    if (body_.size() % 2 != 0) {
      throw Error(ErrorCode::BadInput, "quasi-Pfaffian body must have even length");
    }
  }

  T operator()(const Label& p, const Label& q) { return value(body_.size(), p, q); }

 private:
  T value(size_t len, const Label& p, const Label& q) {
    if (len == 0) return o_->entry(p, q);
    const auto key = std::make_tuple(len, p, q);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Label& a = body_[len - 2];
    const Label& b = body_[len - 1];
    const size_t low = len - 2;
    Matrix<T> m(2, 2, o_->zero());
    m(0, 0) = value(low, a, a);
    m(0, 1) = value(low, a, b);
    m(1, 0) = value(low, b, a);
    m(1, 1) = value(low, b, b);
    Matrix<T> mi;
    try {
      mi = block_invert(m);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Singular && e.code() != ErrorCode::SingularMinor) throw;
      throw Error(ErrorCode::SingularMinor,
                  "condensation breakdown at body length " + std::to_string(len));
    }
    const T ra = value(low, p, a);
    const T rb = value(low, p, b);
    const T ca = value(low, a, q);
    const T cb = value(low, b, q);
    T result = value(low, p, q) - (ra * mi(0, 0) + rb * mi(1, 0)) * ca -
               (ra * mi(0, 1) + rb * mi(1, 1)) * cb;
    memo_.emplace(key, result);
    return result;
  }

  const EntryOracle<T>* o_;
  std::vector<Label> body_;
  std::map<std::tuple<size_t, Label, Label>, T> memo_;
};

template <class T>
T qpf_condense(const EntryOracle<T>& o, const std::vector<Label>& body, const Label& c, const Label& d) {
  Condensation<T> cond(o, body);
  return cond(c, d);
}

/// Condensation with the direct evaluation as fallback; `fell_back` reports
/// whether the condensation broke down.
template <class T>
T qpf_condense_or_direct(const EntryOracle<T>& o, const std::vector<Label>& body, const Label& c,
                         const Label& d, bool* fell_back = nullptr) {
  try {
    T v = qpf_condense(o, body, c, d);
    if (fell_back) *fell_back = false;
    return v;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMinor) throw;
    if (fell_back) *fell_back = true;
    return qpf_direct(o, body, c, d);
  }
}

/// Pf(•,[i,j]) + Pf(•,[j,i])^T, which vanishes identically. For i = j this
/// is value + value^T.
template <class T>
T check_swap_symmetry(const EntryOracle<T>& o, const std::vector<Label>& body, const Label& i,
                      const Label& j) {
  const QuasiPfaffian<T> qp(o, body);
  return qp(i, j) + involute(qp(j, i));
}

/// (Pf(•,[i,j]), Pf(•,[j,i])) for a label i taken from the body; both vanish.
template <class T>
std::pair<T, T> check_zero_condition(const EntryOracle<T>& o, const std::vector<Label>& body,
                                     const Label& i, const Label& j) {
  bool member = false;
  for (const auto& l : body) member = member || l == i;
  if (!member) throw Error(ErrorCode::BadInput, "zero condition needs i in the body");
  const QuasiPfaffian<T> qp(o, body);
  return {qp(i, j), qp(j, i)};
}

/// The three forms of one heredity step for Pf(•,a,b,[c,d]): direct
/// evaluation, the 3x3 quasi-determinant of lower-order quasi-Pfaffians
/// boxed at Pf(•,[c,d]), and the expanded 2x2-inverse form.
template <class T>
struct HeredityForms {
  T direct;
  T quasidet_form;
  T expanded_form;
};

template <class T>
HeredityForms<T> heredity_forms(const EntryOracle<T>& o, const std::vector<Label>& body,
                                const Label& a, const Label& b, const Label& c, const Label& d) {
  std::vector<Label> full = body;
  full.push_back(a);
  full.push_back(b);
  const QuasiPfaffian<T> low(o, body);
  Matrix<T> m3(3, 3, o.zero());
  const Label rows[3] = {a, b, c};
  const Label cols[3] = {a, b, d};
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) m3(r, s) = low(rows[r], cols[s]);

  Matrix<T> m2 = m3.block(0, 0, 2, 2);
  const Matrix<T> mi = gauss_invert(m2);
  T expanded = m3(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) expanded -= m3(2, r) * mi(r, s) * m3(s, 2);

  return {qpf_direct(o, full, c, d), quasidet(m3, 3, 3), std::move(expanded)};
}

}  // namespace qpf
