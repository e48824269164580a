#include "quasipf/classical_pfaffian.hpp"

#include <map>

namespace qpf {

namespace {

Matrix<Rational> restrict_to(const Matrix<Rational>& a, const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  Matrix<Rational> m(n, n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = a(labels[i], labels[j]);
  return m;
}

Rational pf_on(const Matrix<Rational>& a, const std::vector<int>& labels) {
  return pf_expand(restrict_to(a, labels));
}

class Condenser {
 public:
  Condenser(const Matrix<Rational>& a, int* fallbacks) : a_(a), fallbacks_(fallbacks) {}

  // `labels` is kept sorted so that sub-Pfaffians carry no reordering sign.
  Rational pf(const std::vector<int>& labels) {
    const size_t n = labels.size();
    if (n == 0) return 1;
    if (n == 2) return a_(labels[0], labels[1]);
    if (auto it = memo_.find(labels); it != memo_.end()) return it->second;

    const std::vector<int> body(labels.begin(), labels.end() - 4);
    const int p = labels[n - 4], q = labels[n - 3], r = labels[n - 2], s = labels[n - 1];
    auto with = [&](int u, int v) {
      std::vector<int> l = body;
      l.push_back(u);
      l.push_back(v);
      return l;
    };
    Rational value;
    const Rational denom = pf(body);
    if (sgn(denom) == 0) {
      if (fallbacks_) ++*fallbacks_;
      value = pf_on(a_, labels);
    } else {
      value = (pf(with(p, q)) * pf(with(r, s)) - pf(with(p, r)) * pf(with(q, s)) +
               pf(with(p, s)) * pf(with(q, r))) /
              denom;
    }
    memo_.emplace(labels, value);
    return value;
  }

 private:
  const Matrix<Rational>& a_;
  int* fallbacks_;
  std::map<std::vector<int>, Rational> memo_;
};

}  // namespace

Rational pf_condense(const Matrix<Rational>& a, int* expand_fallbacks) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimMismatch, "Pfaffian of non-square matrix");
  if (a.rows() % 2 != 0) return 0;
  std::vector<int> labels(a.rows());
  for (int i = 0; i < a.rows(); ++i) labels[i] = i;
  Condenser c(a, expand_fallbacks);
  return c.pf(labels);
}

Rational det_bareiss(const Matrix<Rational>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimMismatch, "determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  Matrix<Rational> m = a;
  Rational sign = 1;
  Rational prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(m(k, k)) == 0) {
      int r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational check_tanner(const Matrix<Rational>& a) {
  const int size = a.rows();
  if (size < 4 || size % 2 != 0) throw Error(ErrorCode::BadInput, "Tanner check needs 2n+4 labels");
  std::vector<int> body(size - 4);
  for (int i = 0; i < size - 4; ++i) body[i] = i;
  const int a1 = size - 4, a2 = size - 3, a3 = size - 2, a4 = size - 1;
  auto pf_with = [&](std::vector<int> extra) {
    std::vector<int> l = body;
    l.insert(l.end(), extra.begin(), extra.end());
    return pf_on(a, l);
  };
  const Rational lhs = pf_with({a1, a2, a3, a4}) * pf_with({});
  const Rational rhs = pf_with({a1, a2}) * pf_with({a3, a4}) - pf_with({a1, a3}) * pf_with({a2, a4}) +
                       pf_with({a1, a4}) * pf_with({a2, a3});
  return lhs - rhs;
}

Rational check_perk(const Matrix<Rational>& a, const std::vector<int>& b, const std::vector<int>& c) {
  if (b.size() % 2 == 0 || c.size() % 2 == 0) {
    throw Error(ErrorCode::BadInput, "compound identity needs M+1 and N+1 labels with M, N even");
  }
  auto cat = [](std::vector<int> x, const std::vector<int>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  auto drop = [](std::vector<int> x, size_t k) {
    x.erase(x.begin() + static_cast<long>(k));
    return x;
  };
  Rational lhs = 0, rhs = 0;
  for (size_t j = 0; j < b.size(); ++j) {
    const Rational t = pf_on(a, drop(b, j)) * pf_on(a, cat({b[j]}, c));
    lhs += (j % 2 == 0) ? t : Rational(-t);
  }
  for (size_t k = 0; k < c.size(); ++k) {
    const Rational t = pf_on(a, cat(b, {c[k]})) * pf_on(a, drop(c, k));
    rhs += (k % 2 == 0) ? t : Rational(-t);
  }
  return lhs - rhs;
}

std::pair<Rational, Rational> cayley_det(const Matrix<Rational>& body,
                                         const std::vector<Rational>& x_row,
                                         const std::vector<Rational>& y_row,
                                         const Rational& corner) {
  const int m = body.rows();  // = n - 1
  if (body.cols() != m || static_cast<int>(x_row.size()) != m ||
      static_cast<int>(y_row.size()) != m) {
    throw Error(ErrorCode::DimMismatch, "Cayley bordering sizes disagree");
  }
  const bool even_n = (m + 1) % 2 == 0;

  Matrix<Rational> bordered_m(m + 1, m + 1, Rational(0));
  bordered_m(0, 0) = even_n ? corner : Rational(0);
  for (int i = 0; i < m; ++i) {
    bordered_m(0, i + 1) = x_row[i];
    bordered_m(i + 1, 0) = -y_row[i];
    for (int j = 0; j < m; ++j) bordered_m(i + 1, j + 1) = body(i, j);
  }
  const Rational lhs = det_bareiss(bordered_m);

  // Skew matrix on labels (x, y, 2..n) used for the Pfaffian side.
  Matrix<Rational> big(m + 2, m + 2, Rational(0));
  for (int i = 0; i < m; ++i) {
    big(0, i + 2) = x_row[i];
    big(i + 2, 0) = -x_row[i];
    big(1, i + 2) = y_row[i];
    big(i + 2, 1) = -y_row[i];
    for (int j = 0; j < m; ++j) big(i + 2, j + 2) = body(i, j);
  }
  std::vector<int> rest(m);
  for (int i = 0; i < m; ++i) rest[i] = i + 2;
  auto with_front = [&](std::vector<int> front) {
    front.insert(front.end(), rest.begin(), rest.end());
    return front;
  };
  Rational rhs;
  if (even_n) {
    rhs = pf_on(big, with_front({0})) * pf_on(big, with_front({1}));
  } else {
    rhs = pf_on(big, with_front({0, 1})) * pf_on(big, rest);
  }
  return {lhs, rhs};
}

}  // namespace qpf
