#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "quasipf/ring.hpp"

namespace qpf {

/// Truncated Taylor series f(t + h) = c_0 + c_1 h + ... + c_N h^N with
/// coefficients in a (possibly non-commutative) ring. The time variable is
/// central, so products follow the ordered Cauchy rule and the
/// anti-involution acts coefficientwise.
///
/// Binary operations truncate to the smaller order of the two operands.
template <class T>
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::vector<T> coeffs) : c_(std::move(coeffs)) { assert(!c_.empty()); }

  /// Constant function at the given order.
  static Jet constant(const T& value, int order) {
    std::vector<T> c(static_cast<size_t>(order) + 1, zero_like(value));
    c[0] = value;
    return Jet(std::move(c));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& value() const { return c_[0]; }
  const T& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  T& coeff(int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<T>& coeffs() const { return c_; }

  /// k-th time derivative at the expansion point: k! c_k.
  T derivative(int k = 1) const {
    T d = c_.at(static_cast<size_t>(k));
    Rational f = 1;
    for (int m = 2; m <= k; ++m) f *= m;
    return scalar_like(d, f) * d;
  }

  /// The jet of df/dt, one order lower.
  Jet differentiate() const {
    assert(order() >= 1);
    std::vector<T> c;
    c.reserve(c_.size() - 1);
    for (int k = 1; k <= order(); ++k) c.push_back(scalar_like(c_[k], Rational(k)) * c_[k]);
    return Jet(std::move(c));
  }

  Jet truncated(int order) const {
    return Jet(std::vector<T>(c_.begin(), c_.begin() + std::min(this->order(), order) + 1));
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> c;
    c.reserve(n + 1);
    for (int k = 0; k <= n; ++k) c.push_back(a.c_[k] + b.c_[k]);
    return Jet(std::move(c));
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> c;
    c.reserve(n + 1);
    for (int k = 0; k <= n; ++k) c.push_back(a.c_[k] - b.c_[k]);
    return Jet(std::move(c));
  }

  friend Jet operator-(const Jet& a) {
    std::vector<T> c;
    c.reserve(a.c_.size());
    for (const auto& x : a.c_) c.push_back(-x);
    return Jet(std::move(c));
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<T> c;
    c.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      T s = a.c_[0] * b.c_[k];
      for (int i = 1; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
      c.push_back(std::move(s));
    }
    return Jet(std::move(c));
  }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }

  /// Equality of the retained coefficients up to the common order.
  friend bool operator==(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }

 private:
  std::vector<T> c_;
};

template <class T>
Jet<T> zero_like(const Jet<T>& j) {
  return Jet<T>::constant(zero_like(j.value()), j.order());
}

template <class T>
Jet<T> one_like(const Jet<T>& j) {
  return Jet<T>::constant(one_like(j.value()), j.order());
}

template <class T>
Jet<T> scalar_like(const Jet<T>& j, const Rational& q) {
  return Jet<T>::constant(scalar_like(j.value(), q), j.order());
}

template <class T>
Jet<T> involute(const Jet<T>& j) {
  std::vector<T> c;
  c.reserve(j.coeffs().size());
  for (const auto& x : j.coeffs()) c.push_back(involute(x));
  return Jet<T>(std::move(c));
}

/// Two-sided inverse; the derivative terms realise d(a^-1) = -a^-1 (da) a^-1
/// order by order. Throws when the constant term is not invertible.
template <class T>
Jet<T> inverse(const Jet<T>& a) {
  const int n = a.order();
  std::vector<T> b;
  b.reserve(n + 1);
  b.push_back(inverse(a.value()));
  for (int m = 1; m <= n; ++m) {
    T s = a.coeff(1) * b[m - 1];
    for (int k = 2; k <= m; ++k) s += a.coeff(k) * b[m - k];
    b.push_back(-(b[0] * s));
  }
  return Jet<T>(std::move(b));
}

template <class T>
bool is_zero(const Jet<T>& j) {
  for (const auto& x : j.coeffs())
    if (!is_zero(x)) return false;
  return true;
}

using JetElem = Jet<RingElem>;

}  // namespace qpf
