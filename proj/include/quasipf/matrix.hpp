#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "quasipf/jet.hpp"
#include "quasipf/ring.hpp"

namespace qpf {

/// Dense row-major matrix over a ring with anti-involution. Element access
/// through `operator()` is 0-based; the quasi-determinant API below takes
/// 1-based positions.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}
  Matrix(int rows, int cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    assert(a_.size() == static_cast<size_t>(rows) * cols);
  }

  static Matrix identity(int n, const T& proto) {
    Matrix m(n, n, zero_like(proto));
    for (int i = 0; i < n; ++i) m(i, i) = one_like(proto);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return a_.empty(); }
  const T& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  T& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const std::vector<T>& entries() const { return a_; }

  Matrix block(int r0, int c0, int nr, int nc) const {
    std::vector<T> e;
    e.reserve(static_cast<size_t>(nr) * nc);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) e.push_back((*this)(r0 + r, c0 + c));
    return Matrix(nr, nc, std::move(e));
  }

  void set_block(int r0, int c0, const Matrix& b) {
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  /// Copy with row `r` and column `c` (0-based) removed.
  Matrix without(int r, int c) const {
    std::vector<T> e;
    e.reserve(static_cast<size_t>(rows_ - 1) * (cols_ - 1));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (int j = 0; j < cols_; ++j)
        if (j != c) e.push_back((*this)(i, j));
    }
    return Matrix(rows_ - 1, cols_ - 1, std::move(e));
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    assert(!a.empty() || !b.empty());
    const T zero = zero_like(a.empty() ? b.a_.front() : a.a_.front());
    Matrix r(a.rows_, b.cols_, zero);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        T s = zero;
        for (int k = 0; k < a.cols_; ++k) s += a(i, k) * b(k, j);
        r(i, j) = std::move(s);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.a_.size(); ++k)
      if (!(a.a_[k] == b.a_[k])) return false;
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

/// Entry (i, j) of the result is involute(A[j, i]).
template <class T>
Matrix<T> inv_transpose(const Matrix<T>& a) {
  std::vector<T> e;
  e.reserve(a.entries().size());
  for (int r = 0; r < a.cols(); ++r)
    for (int c = 0; c < a.rows(); ++c) e.push_back(involute(a(c, r)));
  return Matrix<T>(a.cols(), a.rows(), std::move(e));
}

/// True when A^T = -A under the entrywise anti-involution.
template <class T>
bool is_skew(const Matrix<T>& a) {
  if (a.rows() != a.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i; j < a.cols(); ++j)
      if (!is_zero(a(i, j) + involute(a(j, i)))) return false;
  return true;
}

namespace detail {

template <class T>
bool try_inverse(const T& x, T& out) {
  try {
    out = inverse(x);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular && e.code() != ErrorCode::SingularMinor) throw;
    return false;
  }
}

}  // namespace detail

/// Gauss-Jordan elimination with first-invertible-pivot search. Row
/// operations are left multiplications, so the result X satisfies XA = I;
/// over the rings used here that makes it a two-sided inverse.
template <class T>
Matrix<T> gauss_invert(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimMismatch, "inverse of non-square matrix");
  const int n = a.rows();
  if (n == 0) return a;
  Matrix<T> w = a;
  Matrix<T> x = Matrix<T>::identity(n, a(0, 0));
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    T pinv;
    for (int r = k; r < n; ++r) {
      if (is_zero(w(r, k))) continue;
      if (detail::try_inverse(w(r, k), pinv)) {
        piv = r;
        break;
      }
    }
    if (piv < 0) {
      throw Error(ErrorCode::SingularMinor, "no invertible pivot in column " + std::to_string(k + 1));
    }
    if (piv != k) {
      for (int c = 0; c < n; ++c) {
        std::swap(w(piv, c), w(k, c));
        std::swap(x(piv, c), x(k, c));
      }
    }
    for (int c = 0; c < n; ++c) {
      w(k, c) = pinv * w(k, c);
      x(k, c) = pinv * x(k, c);
    }
    for (int r = 0; r < n; ++r) {
      if (r == k || is_zero(w(r, k))) continue;
      const T f = w(r, k);
      for (int c = 0; c < n; ++c) {
        w(r, c) -= f * w(k, c);
        x(r, c) -= f * x(k, c);
      }
    }
  }
  return x;
}

struct InvertStats {
  int schur_steps = 0;
  int fallbacks = 0;  // times the elimination path had to take over
};

/// Inverse of a 2x2 matrix by expansion about the off-diagonal entry a21:
/// Q = a12 - a11 a21^-1 a22 and
///   [ -a21^-1 a22 Q^-1   a21^-1 (1 + a22 Q^-1 a11 a21^-1) ]
///   [  Q^-1              -Q^-1 a11 a21^-1                 ]
template <class T>
Matrix<T> invert_2x2_offdiag(const Matrix<T>& m) {
  assert(m.rows() == 2 && m.cols() == 2);
  const T& a11 = m(0, 0);
  const T& a12 = m(0, 1);
  const T& a21 = m(1, 0);
  const T& a22 = m(1, 1);
  T a21i = inverse(a21);
  T qi = inverse(a12 - a11 * a21i * a22);
  Matrix<T> r(2, 2, zero_like(a11));
  r(0, 0) = -(a21i * a22 * qi);
  r(0, 1) = a21i * (one_like(a11) + a22 * qi * a11 * a21i);
  r(1, 0) = qi;
  r(1, 1) = -(qi * a11 * a21i);
  return r;
}

/// Recursive 2x2-block Schur inversion for even sizes:
///   A = [A11 B; C A22],  S = A11 - B A22^-1 C,
///   A^-1 = [S^-1, -S^-1 B A22^-1; -A22^-1 C S^-1, A22^-1 + A22^-1 C S^-1 B A22^-1].
/// For skew A (C = -B^T) this is the Pfaffian-style recursion. Odd sizes and
/// any singular Schur block or 2x2 base case fall back to gauss_invert.
template <class T>
Matrix<T> block_invert(const Matrix<T>& a, InvertStats* stats = nullptr) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimMismatch, "inverse of non-square matrix");
  const int n = a.rows();
  if (n == 0) return a;
  auto fallback = [&] {
    if (stats) ++stats->fallbacks;
    return gauss_invert(a);
  };
  if (n % 2 != 0) return fallback();
  try {
    if (n == 2) {
      if (is_zero(a(1, 0))) return fallback();
      return invert_2x2_offdiag(a);
    }
    const Matrix<T> a11 = a.block(0, 0, 2, 2);
    const Matrix<T> b = a.block(0, 2, 2, n - 2);
    const Matrix<T> c = a.block(2, 0, n - 2, 2);
    const Matrix<T> a22i = block_invert(a.block(2, 2, n - 2, n - 2), stats);
    const Matrix<T> b_a22i = b * a22i;
    const Matrix<T> a22i_c = a22i * c;
    const Matrix<T> si = block_invert(a11 - b_a22i * c, stats);
    const Matrix<T> si_b_a22i = si * b_a22i;
    Matrix<T> r(n, n, zero_like(a(0, 0)));
    r.set_block(0, 0, si);
    r.set_block(0, 2, -si_b_a22i);
    r.set_block(2, 0, -(a22i_c * si));
    r.set_block(2, 2, a22i + a22i_c * si_b_a22i);
    if (stats) ++stats->schur_steps;
    return r;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular && e.code() != ErrorCode::SingularMinor) throw;
    return fallback();
  }
}

/// Quasi-determinant |A|_{ij} = a_ij - r_i^j (A^{ij})^-1 c_i^j, 1-based (i, j).
template <class T>
T quasidet(const Matrix<T>& a, int i, int j) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw Error(ErrorCode::DimMismatch, "quasi-determinant needs a non-empty square matrix");
  }
  const int n = a.rows();
  if (i < 1 || i > n || j < 1 || j > n) throw Error(ErrorCode::BadInput, "quasidet index out of range");
  const int r0 = i - 1, c0 = j - 1;
  if (n == 1) return a(0, 0);
  Matrix<T> minor_inv;
  try {
    minor_inv = gauss_invert(a.without(r0, c0));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::SingularMinor, e.what());
    throw;
  }
  std::vector<T> row, col;
  for (int k = 0; k < n; ++k) {
    if (k != c0) row.push_back(a(r0, k));
    if (k != r0) col.push_back(a(k, c0));
  }
  T s = a(r0, c0);
  for (int p = 0; p < n - 1; ++p) {
    T t = zero_like(s);
    for (int q = 0; q < n - 1; ++q) t += minor_inv(p, q) * col[q];
    s -= row[p] * t;
  }
  return s;
}

/// Bordered matrix [A C; R D] for square A (k x k), C (k x m), R (m x k), D (m x m).
template <class T>
Matrix<T> bordered(const Matrix<T>& a, const Matrix<T>& cols, const Matrix<T>& rows,
                   const Matrix<T>& corner) {
  const int k = a.rows();
  const int m = corner.rows();
  const T proto = corner(0, 0);
  Matrix<T> full(k + m, k + m, zero_like(proto));
  full.set_block(0, 0, a);
  full.set_block(0, k, cols);
  full.set_block(k, 0, rows);
  full.set_block(k, k, corner);
  return full;
}

/// Both sides of the 3x3 Sylvester expansion for a matrix bordered by three
/// columns, three rows and a 3x3 corner: the quasi-determinant of the whole
/// matrix at its last entry, and the 3x3 quasi-determinant of the nine
/// quasi-determinants |A c_q; r_p d_pq| boxed at d_pq.
template <class T>
std::pair<T, T> sylvester_expand(const Matrix<T>& a, const Matrix<T>& cols, const Matrix<T>& rows,
                                 const Matrix<T>& corner) {
  assert(cols.cols() == 3 && rows.rows() == 3 && corner.rows() == 3 && corner.cols() == 3);
  const int k = a.rows();
  const Matrix<T> full = bordered(a, cols, rows, corner);
  T lhs = quasidet(full, k + 3, k + 3);

  Matrix<T> inner(3, 3, zero_like(corner(0, 0)));
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      const Matrix<T> small =
          bordered(a, cols.block(0, q, k, 1), rows.block(p, 0, 1, k), corner.block(p, q, 1, 1));
      inner(p, q) = quasidet(small, k + 1, k + 1);
    }
  }
  T rhs = quasidet(inner, 3, 3);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace qpf
