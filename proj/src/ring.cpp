#include "quasipf/ring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qpf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SingularMinor: return "SingularMinor";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::BadInput, "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/')) {
      throw bad();
    }
  }
  Rational q;
  if (s.front() == '+') s.erase(s.begin());
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

// ---------------------------------------------------------------- quaternion

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
}

Quaternion conjugate(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

Rational norm2(const Quaternion& a) {
  return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

// --------------------------------------------------------------------- block

Block::Block(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
  if (dim <= 0) throw Error(ErrorCode::BadInput, "block dimension must be positive");
}

Block::Block(int dim, std::vector<Rational> entries) : dim_(dim), a_(std::move(entries)) {
  if (dim <= 0 || a_.size() != static_cast<size_t>(dim) * dim) {
    throw Error(ErrorCode::DimMismatch, "block entry count does not match dimension");
  }
}

Block Block::identity(int dim) {
  Block b(dim);
  for (int i = 0; i < dim; ++i) b(i, i) = 1;
  return b;
}

Block Block::transposed() const {
  Block t(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Block::is_zero() const {
  for (const auto& q : a_)
    if (sgn(q) != 0) return false;
  return true;
}

Block Block::inverse() const {
  const int n = dim_;
  Block work = *this;
  Block inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(work(piv, col)) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::Singular, "singular block");
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(work(piv, c), work(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const Rational p = work(col, col);
    for (int c = 0; c < n; ++c) {
      work(col, c) /= p;
      inv(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0) continue;
      const Rational f = work(r, col);
      for (int c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Rational Block::determinant() const {
  Block work = *this;
  Rational det = 1;
  for (int col = 0; col < dim_; ++col) {
    int piv = col;
    while (piv < dim_ && sgn(work(piv, col)) == 0) ++piv;
    if (piv == dim_) return 0;
    if (piv != col) {
      for (int c = 0; c < dim_; ++c) std::swap(work(piv, c), work(col, c));
      det = -det;
    }
    det *= work(col, col);
    for (int r = col + 1; r < dim_; ++r) {
      if (sgn(work(r, col)) == 0) continue;
      const Rational f = work(r, col) / work(col, col);
      for (int c = col; c < dim_; ++c) work(r, c) -= f * work(col, c);
    }
  }
  return det;
}

namespace {

void require_same_dim(const Block& a, const Block& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimMismatch, "block dimensions differ: " + std::to_string(a.dim()) +
                                            " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

Block operator+(const Block& a, const Block& b) {
  require_same_dim(a, b);
  Block r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Block operator-(const Block& a, const Block& b) {
  require_same_dim(a, b);
  Block r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Block operator-(const Block& a) {
  Block r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = -a(i, j);
  return r;
}

Block operator*(const Block& a, const Block& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  Block r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  }
  return r;
}

// ------------------------------------------------------------------ ringelem

const char* to_string(RingKind kind) {
  switch (kind) {
    case RingKind::Rational: return "rational";
    case RingKind::Quaternion: return "quaternion";
    case RingKind::Block: return "block";
  }
  return "?";
}

RingKind parse_ring_kind(std::string_view name) {
  if (name == "rational") return RingKind::Rational;
  if (name == "quaternion") return RingKind::Quaternion;
  if (name == "block") return RingKind::Block;
  throw Error(ErrorCode::BadInput, "unknown ring '" + std::string(name) + "'");
}

RingElem RingElem::zero(const RingSpec& spec) { return scalar(spec, 0); }

RingElem RingElem::one(const RingSpec& spec) { return scalar(spec, 1); }

RingElem RingElem::scalar(const RingSpec& spec, const Rational& q) {
  switch (spec.kind) {
    case RingKind::Rational: return RingElem(q);
    case RingKind::Quaternion: return RingElem(Quaternion{q, 0, 0, 0});
    case RingKind::Block: {
      Block b(spec.block_dim);
      for (int i = 0; i < spec.block_dim; ++i) b(i, i) = q;
      return RingElem(std::move(b));
    }
  }
  throw Error(ErrorCode::BadInput, "unknown ring kind");
}

RingSpec RingElem::spec() const {
  RingSpec s;
  s.kind = kind();
  s.block_dim = s.kind == RingKind::Block ? as_block().dim() : 1;
  return s;
}

bool RingElem::is_zero() const {
  switch (kind()) {
    case RingKind::Rational: return sgn(as_rational()) == 0;
    case RingKind::Quaternion: return norm2(as_quaternion()) == 0;
    case RingKind::Block: return as_block().is_zero();
  }
  return false;
}

RingElem RingElem::involute() const {
  switch (kind()) {
    case RingKind::Rational: return *this;
    case RingKind::Quaternion: return conjugate(as_quaternion());
    case RingKind::Block: return as_block().transposed();
  }
  return *this;
}

RingElem RingElem::inverse() const {
  switch (kind()) {
    case RingKind::Rational: {
      if (sgn(as_rational()) == 0) throw Error(ErrorCode::Singular, "inverse of rational zero");
      return Rational(1 / as_rational());
    }
    case RingKind::Quaternion: {
      const auto& q = as_quaternion();
      const Rational n = norm2(q);
      if (n == 0) throw Error(ErrorCode::Singular, "inverse of quaternion zero");
      const Quaternion c = conjugate(q);
      return Quaternion{c.w / n, c.x / n, c.y / n, c.z / n};
    }
    case RingKind::Block: return as_block().inverse();
  }
  return *this;
}

namespace {

void require_same_kind(const RingElem& a, const RingElem& b) {
  if (a.kind() != b.kind()) {
    throw Error(ErrorCode::TagMismatch, std::string("ring tags differ: ") + to_string(a.kind()) +
                                            " vs " + to_string(b.kind()));
  }
}

}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_kind(a, b);
  switch (a.kind()) {
    case RingKind::Rational: return Rational(a.as_rational() + b.as_rational());
    case RingKind::Quaternion: return a.as_quaternion() + b.as_quaternion();
    case RingKind::Block: return a.as_block() + b.as_block();
  }
  return a;
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_kind(a, b);
  switch (a.kind()) {
    case RingKind::Rational: return Rational(a.as_rational() - b.as_rational());
    case RingKind::Quaternion: return a.as_quaternion() - b.as_quaternion();
    case RingKind::Block: return a.as_block() - b.as_block();
  }
  return a;
}

RingElem operator-(const RingElem& a) {
  switch (a.kind()) {
    case RingKind::Rational: return Rational(-a.as_rational());
    case RingKind::Quaternion: return -a.as_quaternion();
    case RingKind::Block: return -a.as_block();
  }
  return a;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_kind(a, b);
  switch (a.kind()) {
    case RingKind::Rational: return Rational(a.as_rational() * b.as_rational());
    case RingKind::Quaternion: return a.as_quaternion() * b.as_quaternion();
    case RingKind::Block: return a.as_block() * b.as_block();
  }
  return a;
}

RingElem& RingElem::operator+=(const RingElem& o) { return *this = *this + o; }
RingElem& RingElem::operator-=(const RingElem& o) { return *this = *this - o; }

bool operator==(const RingElem& a, const RingElem& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RingKind::Rational: return a.as_rational() == b.as_rational();
    case RingKind::Quaternion: return a.as_quaternion() == b.as_quaternion();
    case RingKind::Block: return a.as_block() == b.as_block();
  }
  return false;
}

std::string to_string(const RingElem& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElem& e) {
  switch (e.kind()) {
    case RingKind::Rational: return os << e.as_rational().get_str();
    case RingKind::Quaternion: {
      const auto& q = e.as_quaternion();
      return os << "(" << q.w.get_str() << ", " << q.x.get_str() << ", " << q.y.get_str() << ", "
                << q.z.get_str() << ")";
    }
    case RingKind::Block: {
      const auto& b = e.as_block();
      os << "[";
      for (int r = 0; r < b.dim(); ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < b.dim(); ++c) os << (c ? ", " : "") << b(r, c).get_str();
        os << "]";
      }
      return os << "]";
    }
  }
  return os;
}

}  // namespace qpf

namespace qpf {

RingElem scale(const RingElem& e, const Rational& q) {
  switch (e.kind()) {
    case RingKind::Rational: return Rational(e.as_rational() * q);
    case RingKind::Quaternion: {
      const auto& a = e.as_quaternion();
      return Quaternion{a.w * q, a.x * q, a.y * q, a.z * q};
    }
    case RingKind::Block: {
      std::vector<Rational> v = e.as_block().entries();
      for (auto& x : v) x *= q;
      return Block(e.as_block().dim(), std::move(v));
    }
  }
  return e;
}

}  // namespace qpf
