// Exact linear algebra over Q and Q(i): dense matrices, sparse echelon forms,
// characteristic polynomials and rational/imaginary root extraction.
#pragma once

#include "legvar/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace legvar {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return legvar::is_zero(x); });
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !legvar::is_zero((*this)(i, j))) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (legvar::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!legvar::is_zero(b(k, j))) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x *= s;
    return r;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector: dimension mismatch");
    std::vector<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!legvar::is_zero(a(i, j)) && !legvar::is_zero(v[j])) r[i] += a(i, j) * v[j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = U((*this)(i, j));
    return r;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum: dimension mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gaussian>;

/// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right kernel {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols());
    v[f] = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Solves m x = b; nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
  return x;
}

// ---- sparse vectors and incremental echelon form ----

template <class T>
using SparseVec = std::map<std::size_t, T>;

template <class T>
void axpy(SparseVec<T>& y, const T& a, const SparseVec<T>& x) {
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

/// Fully reduced row echelon form built one row at a time.
/// Each stored row is monic in its pivot and the pivot appears in no other row.
template <class T>
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t ncols = 0) : ncols_(ncols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::map<std::size_t, SparseVec<T>>& rows() const { return rows_; }

  SparseVec<T> reduce(SparseVec<T> v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto r = rows_.find(it->first);
      if (r == rows_.end()) {
        ++it;
        continue;
      }
      T c = it->second;
      std::size_t key = it->first;
      axpy(v, T(-c), r->second);
      it = v.upper_bound(key);
    }
    return v;
  }

  /// Returns true when v was independent of the current rows.
  bool add(const SparseVec<T>& v) {
    SparseVec<T> r = reduce(v);
    if (r.empty()) return false;
    std::size_t p = r.begin()->first;
    T inv = T(1) / r.begin()->second;
    for (auto& [k, x] : r) x *= inv;
    for (auto& [q, row] : rows_) {
      auto it = row.find(p);
      if (it == row.end()) continue;
      T c = it->second;
      axpy(row, T(-c), r);
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

  /// Kernel basis of the row space viewed as a linear system in ncols unknowns.
  std::vector<SparseVec<T>> kernel() const {
    std::vector<SparseVec<T>> out;
    for (std::size_t f = 0; f < ncols_; ++f) {
      if (rows_.count(f)) continue;
      SparseVec<T> v;
      v[f] = T(1);
      for (const auto& [p, row] : rows_) {
        auto it = row.find(f);
        if (it != row.end()) v[p] = -it->second;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t ncols_;
  std::map<std::size_t, SparseVec<T>> rows_;
};

template <class T>
SparseVec<T> to_sparse(const std::vector<T>& v) {
  SparseVec<T> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace(i, v[i]);
  return s;
}

template <class T>
std::vector<T> to_dense(const SparseVec<T>& s, std::size_t n) {
  std::vector<T> v(n);
  for (const auto& [k, x] : s) v.at(k) = x;
  return v;
}

// ---- univariate polynomials over Q ----

/// Coefficients from degree 0 upward; no trailing zeros.
struct UPoly {
  std::vector<Rational> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rational& lead() const { return c.back(); }

  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }
  Gaussian eval(const Gaussian& x) const {
    Gaussian r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Gaussian(*it);
    return r;
  }
  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long>(k));
    return UPoly(std::move(d));
  }
  UPoly monic() const {
    if (c.empty()) return *this;
    UPoly m = *this;
    Rational l = lead();
    for (auto& x : m.c) x /= l;
    return m;
  }
};

/// Quotient and remainder of a / b.
inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    Rational f = a.lead() / b.lead();
    q[shift] = f;
    for (int k = 0; k <= b.degree(); ++k) a.c[k + shift] -= f * b.c[k];
    a.trim();
  }
  return {UPoly(std::move(q)), a};
}

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Characteristic polynomial det(tI - m) by Hessenberg reduction.
inline UPoly charpoly(QMatrix h) {
  const std::size_t n = h.rows();
  if (n != h.cols()) throw std::invalid_argument("charpoly of non-square matrix");
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m + 1;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i < n && h(m, m - 1) == 0) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    if (h(m, m - 1) == 0) continue;
    for (std::size_t k = m + 1; k < n; ++k) {
      if (h(k, m - 1) == 0) continue;
      Rational u = h(k, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j) h(k, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, k);
    }
  }
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly({Rational(1)});
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (t - h_{m-1,m-1}) p_{m-1} - sum_i h_{i-1,m-1} prod_{j=i}^{m-1} h_{j,j-1} p_{i-1}
    std::vector<Rational> c(m + 1);
    for (std::size_t k = 0; k < p[m - 1].c.size(); ++k) {
      c[k + 1] += p[m - 1].c[k];
      c[k] -= h(m - 1, m - 1) * p[m - 1].c[k];
    }
    Rational t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t == 0) break;
      Rational f = t * h(i - 1, m - 1);
      for (std::size_t k = 0; k < p[i - 1].c.size(); ++k) c[k] -= f * p[i - 1].c[k];
    }
    p[m] = UPoly(std::move(c));
  }
  return p[n];
}

namespace detail {

inline std::vector<Integer> divisors(Integer n, std::size_t max_trial) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> fac;
  Integer d = 2;
  for (std::size_t steps = 0; d * d <= n; ++d, ++steps) {
    if (steps > max_trial) throw std::runtime_error("integer too large for rational root search");
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) fac.emplace_back(d, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : fac) {
    std::size_t sz = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace detail

/// Distinct rational roots of p (rational root test on the primitive integer form).
inline std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  std::vector<Rational> c = p.c;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  if (c.size() < 2) return roots;
  Integer den = 1;
  for (const auto& x : c) den = lcm(den, x.get_den());
  std::vector<Integer> ic;
  for (const auto& x : c) ic.push_back(Integer(x * den));
  UPoly q(c);
  for (const auto& a : detail::divisors(ic.front(), 2000000))
    for (const auto& b : detail::divisors(ic.back(), 2000000))
      for (int s : {1, -1}) {
        Rational r(a * s, b);
        r.canonicalize();
        if (q.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Distinct roots of p lying in Q or in iQ; the remaining factor is reported via `complete`.
inline std::vector<Gaussian> rational_or_imaginary_roots(const UPoly& p, bool* complete = nullptr) {
  UPoly sq = p.degree() > 0 ? divmod(p, gcd(p, p.derivative())).first : p;
  std::vector<Gaussian> out;
  for (const auto& r : rational_roots(sq)) out.emplace_back(r);
  // p(i s) = R(s) + i I(s); imaginary roots i s are common real roots of R and I.
  std::vector<Rational> re(sq.c.size()), im(sq.c.size());
  for (std::size_t k = 0; k < sq.c.size(); ++k) {
    switch (k % 4) {
      case 0: re[k] = sq.c[k]; break;
      case 1: im[k] = sq.c[k]; break;
      case 2: re[k] = -sq.c[k]; break;
      default: im[k] = -sq.c[k]; break;
    }
  }
  UPoly g = gcd(UPoly(re), UPoly(im));
  for (const auto& s : rational_roots(g))
    if (s != 0) out.emplace_back(Rational(0), s);
  if (complete) *complete = static_cast<int>(out.size()) == sq.degree();
  return out;
}

}  // namespace legvar
