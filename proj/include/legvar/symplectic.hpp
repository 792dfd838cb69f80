// Symplectic forms, the Poisson bracket on polynomials and the
// quadric <-> sp(V) dictionary.
#pragma once

#include "legvar/linalg.hpp"
#include "legvar/polynomial.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

namespace legvar {

/// Nondegenerate skew form on Q^{2n}: omega(u, v) = u^T J v.
class SymplecticForm {
 public:
  SymplecticForm() = default;
  explicit SymplecticForm(QMatrix j) : j_(std::move(j)) {
    const std::size_t d = j_.rows();
    if (d == 0 || d != j_.cols() || d % 2) throw std::invalid_argument("form must be square of even size");
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (j_(a, b) != -j_(b, a)) throw std::invalid_argument("form matrix is not skew-symmetric");
    auto inv = inverse(j_);
    if (!inv) throw std::invalid_argument("form matrix is singular");
    dual_ = inv->transpose();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (dual_(a, b) != 0) dual_entries_.emplace_back(a, b, dual_(a, b));
  }

  std::size_t dim() const { return j_.rows(); }
  std::size_t n() const { return j_.rows() / 2; }
  const QMatrix& matrix() const { return j_; }
  /// Matrix W' of the induced form omega' on V*.
  const QMatrix& dual_matrix() const { return dual_; }
  const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& dual_entries() const {
    return dual_entries_;
  }

  template <class T>
  T operator()(const std::vector<T>& u, const std::vector<T>& v) const {
    return pair(j_, u, v);
  }
  /// omega'(alpha, beta) for covectors.
  template <class T>
  T dual_pairing(const std::vector<T>& a, const std::vector<T>& b) const {
    return pair(dual_, a, b);
  }

  friend bool operator==(const SymplecticForm& a, const SymplecticForm& b) { return a.j_ == b.j_; }

 private:
  template <class T>
  static T pair(const QMatrix& m, const std::vector<T>& u, const std::vector<T>& v) {
    T s{};
    for (std::size_t a = 0; a < m.rows(); ++a) {
      if (is_zero(u[a])) continue;
      for (std::size_t b = 0; b < m.cols(); ++b)
        if (m(a, b) != 0 && !is_zero(v[b])) s += u[a] * T(m(a, b)) * v[b];
    }
    return s;
  }

  QMatrix j_, dual_;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> dual_entries_;
};

/// J = (0 Id_n; -Id_n 0).
inline SymplecticForm standard_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("standard_form: n must be positive");
  QMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return SymplecticForm(std::move(j));
}

/// The induced form omega' = (phi^{-1})^* omega, phi(v) = omega(v, .).
inline SymplecticForm dual_form(const SymplecticForm& form) { return SymplecticForm(form.dual_matrix()); }

/// [f, g] = sum_ij df/dx_i W'_ij dg/dx_j.
inline Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g, const SymplecticForm& form) {
  const std::size_t d = form.dim();
  if (f.nvars() != d || g.nvars() != d) throw std::invalid_argument("poisson_bracket: dimension mismatch");
  std::vector<Polynomial> df(d), dg(d);
  std::vector<bool> hf(d), hg(d);
  for (std::size_t i = 0; i < d; ++i) {
    df[i] = partial_derivative(f, i);
    dg[i] = partial_derivative(g, i);
    hf[i] = !df[i].is_zero();
    hg[i] = !dg[i].is_zero();
  }
  Polynomial r(d);
  for (const auto& [i, j, w] : form.dual_entries()) {
    if (!hf[i] || !hg[j]) continue;
    Polynomial t = df[i] * dg[j];
    t *= w;
    r += t;
  }
  return r;
}

// ---- quadrics as symmetric matrices ----

/// Symmetric A with q(x) = x^T A x.
struct QuadraticForm {
  QMatrix a;
};

inline QuadraticForm quadric_matrix(const Polynomial& q) {
  if (q.homogeneous_degree().value_or(2) != 2) throw std::invalid_argument("quadric_matrix: not a quadric");
  const std::size_t d = q.nvars();
  QMatrix a(d, d);
  for (const auto& [m, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d; ++i)
      for (unsigned k = 0; k < m[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      a(idx[0], idx[0]) += c;
    } else {
      Rational h = c / 2;
      a(idx[0], idx[1]) += h;
      a(idx[1], idx[0]) += h;
    }
  }
  return {a};
}

inline Polynomial quadric_polynomial(const QuadraticForm& q) {
  const std::size_t d = q.a.rows();
  Polynomial p(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational c = i == j ? Rational(q.a(i, i)) : Rational(q.a(i, j) + q.a(j, i));
      if (c == 0) continue;
      Monomial m = Monomial::var(d, i) * Monomial::var(d, j);
      p.add_term(m, c);
    }
  return p;
}

/// rho(A) = 2 W' A; for the standard form W' = J and this is 2JA.
inline QMatrix quadric_to_sp(const QuadraticForm& q, const SymplecticForm& form) {
  if (q.a.rows() != form.dim()) throw std::invalid_argument("quadric_to_sp: dimension mismatch");
  return Rational(2) * (form.dual_matrix() * q.a);
}

/// [A, B] = 2(A W' B - B W' A).
inline QuadraticForm quadric_bracket_matrix(const QuadraticForm& a, const QuadraticForm& b,
                                            const SymplecticForm& form) {
  if (a.a.rows() != form.dim() || b.a.rows() != form.dim())
    throw std::invalid_argument("quadric_bracket_matrix: dimension mismatch");
  const QMatrix& w = form.dual_matrix();
  return {Rational(2) * (a.a * w * b.a - b.a * w * a.a)};
}

/// M^T J + J M = 0.
template <class T>
bool sp_membership(const Matrix<T>& m, const SymplecticForm& form) {
  if (m.rows() != form.dim() || m.cols() != form.dim()) return false;
  Matrix<T> j = form.matrix().template cast<T>();
  return (m.transpose() * j + j * m).is_zero();
}

/// Columns of P form a Darboux basis: P^T J P is the standard matrix.
/// Basis vectors are consumed in the given preference order (default e_0, e_1, ...).
inline QMatrix darboux_basis(const SymplecticForm& form, std::vector<std::size_t> order = {}) {
  const std::size_t d = form.dim(), n = form.n();
  if (order.empty())
    for (std::size_t i = 0; i < d; ++i) order.push_back(i);
  std::vector<std::vector<Rational>> pool;
  for (auto i : order) {
    std::vector<Rational> e(d);
    e.at(i) = 1;
    pool.push_back(e);
  }
  auto nonzero = [](const std::vector<Rational>& v) {
    for (const auto& x : v)
      if (x != 0) return true;
    return false;
  };
  std::vector<std::vector<Rational>> us, ws;
  while (us.size() < n) {
    std::size_t ui = 0;
    while (ui < pool.size() && !nonzero(pool[ui])) ++ui;
    if (ui == pool.size()) throw std::logic_error("darboux_basis: ran out of vectors");
    auto u = pool[ui];
    std::size_t wi = ui + 1;
    while (wi < pool.size() && form(u, pool[wi]) == 0) ++wi;
    if (wi == pool.size()) throw std::logic_error("darboux_basis: degenerate form");
    auto w = pool[wi];
    Rational s = 1 / form(u, w);
    for (auto& x : w) x *= s;
    pool.erase(pool.begin() + static_cast<long>(wi));
    pool.erase(pool.begin() + static_cast<long>(ui));
    for (auto& v : pool) {
      Rational a = form(v, u), b = form(v, w);
      for (std::size_t k = 0; k < d; ++k) v[k] += a * w[k] - b * u[k];
    }
    us.push_back(u);
    ws.push_back(w);
  }
  QMatrix p(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      p(k, i) = us[i][k];
      p(k, n + i) = ws[i][k];
    }
  return p;
}

}  // namespace legvar
