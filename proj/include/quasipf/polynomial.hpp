#pragma once

#include <vector>

#include "quasipf/jet.hpp"

namespace qpf {

/// Polynomial in a central scalar indeterminate x with ring coefficients,
/// stored lowest degree first. Coefficients are written to the left of the
/// powers of x; since x is central this is presentational only.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(T zero) : zero_(std::move(zero)) {}
  Poly(T zero, std::vector<T> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  /// c x^k
  static Poly monomial(const T& c, int k) {
    Poly p(zero_like(c));
    p.c_.assign(static_cast<size_t>(k) + 1, p.zero_);
    p.c_[k] = c;
    p.trim();
    return p;
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const T& coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : zero_;
  }
  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  bool is_zero() const { return c_.empty(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<T> c;
    c.reserve(n);
    for (size_t k = 0; k < n; ++k) c.push_back(a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k)));
    return Poly(a.zero_, std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    const size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<T> c;
    c.reserve(n);
    for (size_t k = 0; k < n; ++k) c.push_back(a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k)));
    return Poly(a.zero_, std::move(c));
  }

  friend Poly operator-(const Poly& a) {
    std::vector<T> c;
    for (const auto& x : a.c_) c.push_back(-x);
    return Poly(a.zero_, std::move(c));
  }

  /// Left multiplication by a ring element.
  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> c;
    c.reserve(p.c_.size());
    for (const auto& x : p.c_) c.push_back(s * x);
    return Poly(p.zero_, std::move(c));
  }

  /// x * p
  Poly shifted() const {
    std::vector<T> c;
    c.reserve(c_.size() + 1);
    c.push_back(zero_);
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(zero_, std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

 private:
  void trim() {
    while (!c_.empty() && qpf::is_zero(c_.back())) c_.pop_back();
  }

  T zero_;
  std::vector<T> c_;
};

/// Coefficientwise map, e.g. extracting values or time derivatives from a
/// polynomial with jet coefficients.
template <class T, class F>
auto map_coeffs(const Poly<T>& p, F&& f) {
  using U = decltype(f(p.zero()));
  std::vector<U> c;
  for (const auto& x : p.coeffs()) c.push_back(f(x));
  return Poly<U>(f(p.zero()), std::move(c));
}

template <class T>
Poly<T> poly_value(const Poly<Jet<T>>& p) {
  return map_coeffs(p, [](const Jet<T>& j) { return j.value(); });
}

template <class T>
Poly<T> poly_derivative(const Poly<Jet<T>>& p) {
  return map_coeffs(p, [](const Jet<T>& j) { return j.derivative(1); });
}

}  // namespace qpf
