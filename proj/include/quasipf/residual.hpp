#pragma once

#include <string>
#include <vector>

#include "quasipf/jet.hpp"
#include "quasipf/polynomial.hpp"
#include "quasipf/ring.hpp"

namespace qpf {

/// Named difference between the two sides of an identity. Scalar identities
/// hold one value; polynomial identities hold one value per coefficient.
struct Residual {
  std::string name;
  std::vector<RingElem> values;

  bool is_zero() const {
    for (const auto& v : values)
      if (!v.is_zero()) return false;
    return true;
  }
};

/// Value of a jet difference at the expansion point.
inline Residual scalar_residual(std::string name, const JetElem& lhs, const JetElem& rhs) {
  return {std::move(name), {(lhs - rhs).value()}};
}

inline Residual scalar_residual(std::string name, const RingElem& value) {
  return {std::move(name), {value}};
}

inline Residual poly_residual(std::string name, const Poly<JetElem>& lhs, const Poly<JetElem>& rhs) {
  Residual r{std::move(name), {}};
  for (const auto& c : (lhs - rhs).coeffs()) r.values.push_back(c.value());
  return r;
}

inline bool all_zero(const std::vector<Residual>& rs) {
  for (const auto& r : rs)
    if (!r.is_zero()) return false;
  return true;
}

}  // namespace qpf
