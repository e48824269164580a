#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quasipf/error.hpp"

namespace qpf {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Rational quaternion w + x i + y j + z k. The anti-involution is
/// conjugation.
struct Quaternion {
  Rational w, x, y, z;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);
Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion conjugate(const Quaternion& a);
Rational norm2(const Quaternion& a);

/// Square m x m rational matrix; the anti-involution is the transpose.
/// Not a division ring: inversion fails exactly on singular blocks.
class Block {
 public:
  Block() = default;
  explicit Block(int dim);
  Block(int dim, std::vector<Rational> entries);

  static Block identity(int dim);

  int dim() const { return dim_; }
  const Rational& operator()(int r, int c) const { return a_[r * dim_ + c]; }
  Rational& operator()(int r, int c) { return a_[r * dim_ + c]; }
  const std::vector<Rational>& entries() const { return a_; }

  Block transposed() const;
  Block inverse() const;  // throws Error(Singular)
  Rational determinant() const;
  bool is_zero() const;

  friend bool operator==(const Block&, const Block&) = default;

 private:
  int dim_ = 0;
  std::vector<Rational> a_;
};

Block operator+(const Block& a, const Block& b);
Block operator-(const Block& a, const Block& b);
Block operator-(const Block& a);
Block operator*(const Block& a, const Block& b);

enum class RingKind { Rational, Quaternion, Block };

const char* to_string(RingKind kind);
RingKind parse_ring_kind(std::string_view name);

/// Identifies one concrete ring: the tag plus the block dimension (ignored
/// for the scalar rings).
struct RingSpec {
  RingKind kind = RingKind::Rational;
  int block_dim = 1;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Element of one of the three rings with anti-involution. Operands of a
/// binary operation must share the tag (and block dimension); mismatches
/// throw TagMismatch / DimMismatch.
class RingElem {
 public:
  RingElem() : v_(Rational(0)) {}
  RingElem(Rational q) : v_(std::move(q)) {}  // NOLINT: implicit by design of arithmetic code
  RingElem(Quaternion q) : v_(std::move(q)) {}  // NOLINT
  RingElem(Block b) : v_(std::move(b)) {}  // NOLINT

  static RingElem zero(const RingSpec& spec);
  static RingElem one(const RingSpec& spec);
  static RingElem scalar(const RingSpec& spec, const Rational& q);

  RingKind kind() const { return static_cast<RingKind>(v_.index()); }
  RingSpec spec() const;

  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const Quaternion& as_quaternion() const { return std::get<Quaternion>(v_); }
  const Block& as_block() const { return std::get<Block>(v_); }

  bool is_zero() const;
  RingElem involute() const;
  RingElem inverse() const;  // throws Error(Singular)

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  std::variant<Rational, Quaternion, Block> v_;
};

std::string to_string(const RingElem& e);
std::ostream& operator<<(std::ostream& os, const RingElem& e);

// Generic ring interface used by the templated algorithms; Jet<T> provides
// the same set.
inline RingElem zero_like(const RingElem& e) { return RingElem::zero(e.spec()); }
inline RingElem one_like(const RingElem& e) { return RingElem::one(e.spec()); }
inline RingElem involute(const RingElem& e) { return e.involute(); }
inline RingElem inverse(const RingElem& e) { return e.inverse(); }
inline bool is_zero(const RingElem& e) { return e.is_zero(); }
inline RingElem scalar_like(const RingElem& e, const Rational& q) {
  return RingElem::scalar(e.spec(), q);
}

// Plain rationals as a commutative ring with the identity involution.
inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline Rational involute(const Rational& q) { return q; }
inline Rational inverse(const Rational& q) {
  if (sgn(q) == 0) throw Error(ErrorCode::Singular, "inverse of rational zero");
  return 1 / q;
}
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational scalar_like(const Rational&, const Rational& q) { return q; }

}  // namespace qpf

namespace qpf {

/// q * e for a rational scalar q, without forming the scalar ring element.
RingElem scale(const RingElem& e, const Rational& q);

}  // namespace qpf
