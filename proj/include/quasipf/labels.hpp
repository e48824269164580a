#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "quasipf/matrix.hpp"
#include "quasipf/polynomial.hpp"

namespace qpf {

/// Opaque quasi-Pfaffian label. Body labels index the skew entry table;
/// C, D, X and B are extension labels whose entries follow fixed rules (see
/// EntryOracle::entry).
struct Label {
  enum class Kind { Body, C, D, X, B };

  Kind kind = Kind::Body;
  int index = 0;

  static Label body(int k) { return {Kind::Body, k}; }
  static Label c(int k) { return {Kind::C, k}; }
  static Label d(int k) { return {Kind::D, k}; }
  static Label x() { return {Kind::X, 0}; }
  static Label b() { return {Kind::B, 0}; }

  bool is_body() const { return kind == Kind::Body; }

  friend auto operator<=>(const Label&, const Label&) = default;
};

std::string to_string(const Label& l);
Label parse_label(std::string_view text);

/// Body labels first..first+count-1.
std::vector<Label> body_range(int first, int count);

/// Source of quasi-Pfaffian entries. Subclasses supply the body table and,
/// optionally, moment functions (for D labels) and a right-hand side (for
/// the B label). `entry` applies the skew extension rules:
///
///   (i, j)   body(i, j)
///   (i, c_j) delta_ij          (c_j, i) -delta_ij
///   (i, d_j) phi_{i+j}^T       (d_j, i) -phi_{i+j}
///   (i, b)   b_i               (b, i)   -b_i^T
///   every pair of extension labels is 0
///
/// The X label only appears as a boxed column: entry(i, x) = x^i.
///
/// The C row can be switched to (c_j, i) = +delta_ij. The Wronskian
/// derivative formulas and the linear-system solution use the skew rule,
/// while the Grammian c-label formulas and the B-Toda variables are stated
/// with the unit row.
enum class CRow { Skew, Unit };

template <class T>
class EntryOracle {
 public:
  virtual ~EntryOracle() = default;

  CRow c_row() const { return c_row_; }
  void set_c_row(CRow rule) { c_row_ = rule; }

  virtual T zero() const = 0;
  virtual T body(int i, int j) const = 0;
  virtual T moment(int k) const {
    throw Error(ErrorCode::BadInput, "oracle has no moment functions for d_" + std::to_string(k));
  }
  virtual T rhs(int i) const {
    throw Error(ErrorCode::BadInput, "oracle has no right-hand side for b (row " + std::to_string(i) + ")");
  }

  T one() const { return one_like(zero()); }

  T entry(const Label& p, const Label& q) const {
    using K = Label::Kind;
    if (p.kind == K::X || q.kind == K::X) {
      throw Error(ErrorCode::BadInput, "x label has no scalar entries; use the polynomial path");
    }
    if (p.is_body() && q.is_body()) return body(p.index, q.index);
    if (p.is_body()) {
      switch (q.kind) {
        case K::C: return p.index == q.index ? one() : zero();
        case K::D: return involute(moment(p.index + q.index));
        case K::B: return rhs(p.index);
        default: break;
      }
    }
    if (q.is_body()) {
      switch (p.kind) {
        case K::C:
          if (p.index != q.index) return zero();
          return c_row_ == CRow::Skew ? -one() : one();
        case K::D: return -moment(p.index + q.index);
        case K::B: return -involute(rhs(q.index));
        default: break;
      }
    }
    return zero();
  }

  /// entry(p, x) as a polynomial: x^i for body label i, otherwise 0.
  Poly<T> x_entry(const Label& p) const {
    if (p.is_body()) return Poly<T>::monomial(one(), p.index);
    return Poly<T>(zero());
  }

 private:
  CRow c_row_ = CRow::Skew;
};

/// Oracle over an explicit square table with 1-based body labels, an
/// optional right-hand side b (1-based) and optional moments phi_0, phi_1, ...
template <class T>
class TableOracle final : public EntryOracle<T> {
 public:
  TableOracle(Matrix<T> table, std::vector<T> rhs = {}, std::vector<T> moments = {})
      : table_(std::move(table)), rhs_(std::move(rhs)), moments_(std::move(moments)) {
    if (table_.empty()) throw Error(ErrorCode::BadInput, "entry table is empty");
  }

  T zero() const override { return zero_like(table_(0, 0)); }

  T body(int i, int j) const override {
    check(i, table_.rows(), "body");
    check(j, table_.cols(), "body");
    return table_(i - 1, j - 1);
  }

  T rhs(int i) const override {
    if (rhs_.empty()) return EntryOracle<T>::rhs(i);
    check(i, static_cast<int>(rhs_.size()), "rhs");
    return rhs_[i - 1];
  }

  T moment(int k) const override {
    if (k < 0 || k >= static_cast<int>(moments_.size())) return EntryOracle<T>::moment(k);
    return moments_[k];
  }

  const Matrix<T>& table() const { return table_; }

 private:
  static void check(int i, int n, const char* what) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::BadInput, std::string(what) + " label " + std::to_string(i) +
                                           " outside 1.." + std::to_string(n));
    }
  }

  Matrix<T> table_;
  std::vector<T> rhs_;
  std::vector<T> moments_;
};

}  // namespace qpf
