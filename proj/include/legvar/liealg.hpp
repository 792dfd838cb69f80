// The Lie algebra spanned by the quadrics of an ideal: structure constants,
// Killing form, Cartan subalgebra, roots and type identification.
#pragma once

#include "legvar/dynkin.hpp"
#include "legvar/legendrian.hpp"
#include "legvar/linalg.hpp"
#include "legvar/symplectic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace legvar {

class NotClosed : public std::runtime_error {
 public:
  NotClosed(std::size_t i, std::size_t j)
      : std::runtime_error("quadric span not closed under the bracket: [b" + std::to_string(i) + ", b" +
                           std::to_string(j) + "] lies outside"),
        i(i), j(j) {}
  std::size_t i, j;
};

class NotAdapted : public std::runtime_error {
 public:
  explicit NotAdapted(const std::string& what) : std::runtime_error("basis not adapted: " + what) {}
};

class NotSemisimple : public std::runtime_error {
 public:
  NotSemisimple() : std::runtime_error("algebra is not semisimple") {}
};

using SparseEntries = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

namespace detail {

/// Coordinates of a quadric: key i*d + j (i <= j) holds the coefficient of x_i x_j.
inline SparseVec<Rational> quadric_coords(const Polynomial& q) {
  const std::size_t d = q.nvars();
  SparseVec<Rational> out;
  for (const auto& [m, c] : q.terms()) {
    if (m.degree() != 2) throw std::invalid_argument("quadric_coords: not a quadric");
    std::size_t a = d, b = d;
    for (std::size_t i = 0; i < d; ++i)
      for (unsigned k = 0; k < m[i]; ++k) (a == d ? a : b) = i;
    out[a * d + b] = c;
  }
  return out;
}

inline Polynomial quadric_from_coords(const SparseVec<Rational>& v, std::size_t d) {
  Polynomial p(d);
  for (const auto& [key, c] : v)
    p.add_term(Monomial::var(d, key / d) * Monomial::var(d, key % d), c);
  return p;
}

/// grad[p] = linear form d q / d x_p.
inline std::vector<SparseVec<Rational>> quadric_gradient(const SparseVec<Rational>& q, std::size_t d) {
  std::vector<SparseVec<Rational>> g(d);
  for (const auto& [key, c] : q) {
    std::size_t a = key / d, b = key % d;
    if (a == b) {
      g[a][a] += 2 * c;
    } else {
      g[a][b] += c;
      g[b][a] += c;
    }
  }
  return g;
}

}  // namespace detail

/// Degree-2 generators reduced to a linearly independent subset, in input order.
inline std::vector<Polynomial> quadratic_part(const VarietyPresentation& v) {
  SparseEchelon<Rational> ech(v.nvars * v.nvars);
  std::vector<Polynomial> out;
  for (const auto& g : v.generators) {
    if (g.is_zero() || g.homogeneous_degree() != 2u) continue;
    if (ech.add(detail::quadric_coords(g))) out.push_back(g);
  }
  return out;
}

/// Quadric bracket in coordinates; agrees with poisson_bracket on quadrics.
inline SparseVec<Rational> quadric_bracket(const std::vector<SparseVec<Rational>>& gf,
                                           const std::vector<SparseVec<Rational>>& gg,
                                           const SymplecticForm& form) {
  const std::size_t d = form.dim();
  SparseVec<Rational> out;
  for (const auto& [p, q, w] : form.dual_entries()) {
    if (gf[p].empty() || gg[q].empty()) continue;
    for (const auto& [a, fa] : gf[p])
      for (const auto& [b, gb] : gg[q]) {
        std::size_t key = a <= b ? a * d + b : b * d + a;
        auto& slot = out[key];
        slot += w * fa * gb;
        if (slot == 0) out.erase(key);
      }
  }
  return out;
}

class LieAlgebraPresentation {
 public:
  LieAlgebraPresentation() = default;

  std::size_t dim() const { return basis_.size(); }
  const SymplecticForm& form() const { return form_; }
  const std::vector<Polynomial>& basis() const { return basis_; }

  /// c[i][j][.] with [b_i, b_j] = sum_k c[i][j][k] b_k.
  const SparseVec<Rational>& structure(std::size_t i, std::size_t j) const { return c_[i * dim() + j]; }

  /// [x, y] for algebra elements given in basis coordinates.
  template <class T>
  SparseVec<T> bracket(const SparseVec<T>& x, const SparseVec<T>& y) const {
    SparseVec<T> out;
    for (const auto& [i, xi] : x)
      for (const auto& [j, yj] : y) {
        if (i == j) continue;
        T s = xi * yj;
        for (const auto& [k, c] : structure(i, j)) {
          auto& slot = out[k];
          slot += s * T(c);
          if (is_zero(slot)) out.erase(k);
        }
      }
    return out;
  }

  /// Dense ad(x) acting on basis coordinates (columns are images of b_j).
  QMatrix ad(const SparseVec<Rational>& x) const {
    const std::size_t d = dim();
    QMatrix m(d, d);
    for (const auto& [i, xi] : x)
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [k, c] : structure(i, j)) m(k, j) += xi * c;
    return m;
  }

  /// rho(b_k) = 2 W' A_k as sparse entries.
  const SparseEntries& rho_entries(std::size_t k) const { return rho_[k]; }

  template <class T>
  Matrix<T> rho(const SparseVec<T>& x) const {
    const std::size_t d = form_.dim();
    Matrix<T> m(d, d);
    for (const auto& [k, xk] : x)
      for (const auto& [a, b, v] : rho_[k]) m(a, b) += xk * T(v);
    return m;
  }

  /// Polynomial of an algebra element.
  Polynomial element(const SparseVec<Rational>& x) const {
    Polynomial p(form_.dim());
    for (const auto& [k, xk] : x) p += basis_[k] * xk;
    return p;
  }

  /// Coordinates of a quadric in the basis, or nullopt when outside the span.
  std::optional<SparseVec<Rational>> coordinates(const Polynomial& q) const {
    SparseVec<Rational> v = detail::quadric_coords(q);
    SparseVec<Rational> r = span_.reduce(v);
    SparseVec<Rational> out;
    for (const auto& [k, c] : r) {
      if (k < tag_offset_) return std::nullopt;
      out[k - tag_offset_] = -c;
    }
    return out;
  }

  friend LieAlgebraPresentation close_and_present(const std::vector<Polynomial>& quadrics,
                                                  const SymplecticForm& form);

 private:
  SymplecticForm form_;
  std::vector<Polynomial> basis_;
  std::vector<SparseVec<Rational>> c_;
  std::vector<SparseEntries> rho_;
  SparseEchelon<Rational> span_;
  std::size_t tag_offset_ = 0;
};

/// Builds structure constants for the span of independent quadrics; throws
/// NotClosed naming the first pair whose bracket leaves the span.
inline LieAlgebraPresentation close_and_present(const std::vector<Polynomial>& quadrics,
                                                const SymplecticForm& form) {
  const std::size_t d = form.dim(), m = quadrics.size();
  LieAlgebraPresentation L;
  L.form_ = form;
  L.basis_ = quadrics;
  L.tag_offset_ = d * d;
  L.span_ = SparseEchelon<Rational>(d * d + m);
  std::vector<SparseVec<Rational>> coords;
  std::vector<std::vector<SparseVec<Rational>>> grads;
  for (std::size_t k = 0; k < m; ++k) {
    if (quadrics[k].nvars() != d) throw std::invalid_argument("close_and_present: dimension mismatch");
    coords.push_back(detail::quadric_coords(quadrics[k]));
    SparseVec<Rational> row = coords.back();
    row[d * d + k] = 1;
    if (!L.span_.add(row))
      throw std::invalid_argument("close_and_present: quadrics are linearly dependent");
    grads.push_back(detail::quadric_gradient(coords.back(), d));
  }
  // Every pivot lies among the quadric coordinates once all rows are added.
  for (const auto& [p, row] : L.span_.rows())
    if (p >= d * d) throw std::invalid_argument("close_and_present: quadrics are linearly dependent");

  L.c_.assign(m * m, {});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      SparseVec<Rational> br = quadric_bracket(grads[i], grads[j], form);
      SparseVec<Rational> r = L.span_.reduce(br);
      SparseVec<Rational> c;
      for (const auto& [k, v] : r) {
        if (k < d * d) throw NotClosed(i, j);
        c[k - d * d] = -v;
      }
      SparseVec<Rational> neg;
      for (const auto& [k, v] : c) neg[k] = -v;
      L.c_[i * m + j] = std::move(c);
      L.c_[j * m + i] = std::move(neg);
    }

  const QMatrix& w = form.dual_matrix();
  for (std::size_t k = 0; k < m; ++k) {
    // rho = 2 W' A with A_aa = q_aa, A_ab = q_ab / 2.
    QMatrix a(d, d);
    for (const auto& [key, c] : coords[k]) {
      std::size_t x = key / d, y = key % d;
      if (x == y) {
        a(x, x) += c;
      } else {
        a(x, y) += c / 2;
        a(y, x) += c / 2;
      }
    }
    SparseEntries e;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t col = 0; col < d; ++col) {
        Rational s = 0;
        for (std::size_t t = 0; t < d; ++t)
          if (w(r, t) != 0 && a(t, col) != 0) s += w(r, t) * a(t, col);
        if (s != 0) e.emplace_back(r, col, 2 * s);
      }
    L.rho_.push_back(std::move(e));
  }
  return L;
}

/// Exact Jacobi identity on all basis triples; returns the first failing triple.
inline std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> jacobi_violation(
    const LieAlgebraPresentation& L) {
  const std::size_t m = L.dim();
  auto unit = [](std::size_t k) { return SparseVec<Rational>{{k, Rational(1)}}; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        SparseVec<Rational> s = L.bracket(L.structure(i, j), unit(k));
        axpy(s, Rational(1), L.bracket(L.structure(j, k), unit(i)));
        axpy(s, Rational(1), L.bracket(L.structure(k, i), unit(j)));
        if (!s.empty()) return std::make_tuple(i, j, k);
      }
  return std::nullopt;
}

/// K_ij = tr(ad b_i ad b_j).
inline QMatrix killing_form(const LieAlgebraPresentation& L) {
  const std::size_t m = L.dim();
  QMatrix k(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Rational s = 0;
      // (ad_i)_{lk} = c[i][k][l]
      for (std::size_t kk = 0; kk < m; ++kk)
        for (const auto& [l, v] : L.structure(i, kk)) {
          const auto& col = L.structure(j, l);
          auto it = col.find(kk);
          if (it != col.end()) s += v * it->second;
        }
      k(i, j) = k(j, i) = s;
    }
  return k;
}

inline bool is_semisimple(const QMatrix& killing) { return killing.rows() > 0 && determinant(killing) != 0; }

// ---- Cartan subalgebra ----

struct RootSpace {
  std::vector<Gaussian> root;           // eigenvalues against the Cartan elements
  SparseVec<Gaussian> vector;           // root vector in basis coordinates
  std::optional<std::size_t> basis_index;  // set when the root vector is a basis element
};

struct CartanData {
  std::vector<SparseVec<Rational>> cartan;  // Cartan elements in basis coordinates
  std::vector<std::size_t> cartan_basis;    // basis indices, when every Cartan element is a basis element
  std::vector<RootSpace> roots;
  QMatrix killing;
  bool split = true;            // all roots rational
  std::string method;           // "diagonal", "greedy", "random"

  std::size_t rank() const { return cartan.size(); }
};

namespace detail {

inline bool ad_semisimple(const QMatrix& ad) {
  UPoly p = charpoly(ad);
  UPoly s = divmod(p, gcd(p, p.derivative())).first;
  const std::size_t n = ad.rows();
  QMatrix acc(n, n);
  for (std::size_t k = s.c.size(); k-- > 0;) {
    acc = acc * ad;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += s.c[k];
  }
  return acc.is_zero();
}

/// Basis of {x : [h, x] = 0 for all h in hs}.
inline std::vector<SparseVec<Rational>> centralizer(const LieAlgebraPresentation& L,
                                                    const std::vector<SparseVec<Rational>>& hs) {
  const std::size_t m = L.dim();
  SparseEchelon<Rational> ech(m);
  for (const auto& h : hs) {
    std::map<std::size_t, SparseVec<Rational>> rows;
    for (std::size_t j = 0; j < m; ++j) {
      SparseVec<Rational> col = L.bracket(h, SparseVec<Rational>{{j, Rational(1)}});
      for (const auto& [k, v] : col) rows[k][j] = v;
    }
    for (const auto& [k, row] : rows) ech.add(row);
  }
  return ech.kernel();
}

inline bool commutes_with(const LieAlgebraPresentation& L, const std::vector<SparseVec<Rational>>& hs,
                          const SparseVec<Rational>& x) {
  for (const auto& h : hs)
    if (!L.bracket(h, x).empty()) return false;
  return true;
}

}  // namespace detail

/// Cartan subalgebra: the diagonal-rho subspace, extended by commuting
/// ad-semisimple basis elements and then by seeded random centralizer elements.
inline CartanData cartan_subalgebra(const LieAlgebraPresentation& L, std::uint64_t seed = 1) {
  CartanData cd;
  cd.killing = killing_form(L);
  if (!is_semisimple(cd.killing)) throw NotSemisimple();
  const std::size_t m = L.dim(), d = L.form().dim();

  // Off-diagonal entries of rho must vanish.
  std::map<std::size_t, SparseVec<Rational>> eqs;
  for (std::size_t k = 0; k < m; ++k)
    for (const auto& [a, b, v] : L.rho_entries(k))
      if (a != b) eqs[a * d + b][k] += v;
  SparseEchelon<Rational> ech(m);
  for (const auto& [pos, row] : eqs) ech.add(row);
  std::vector<SparseVec<Rational>> hs = ech.kernel();
  cd.method = "diagonal";

  SparseEchelon<Rational> span(m);
  for (const auto& h : hs) span.add(h);

  auto add_if_toral = [&](const SparseVec<Rational>& x) {
    if (span.reduce(x).empty() || !detail::commutes_with(L, hs, x)) return false;
    if (!detail::ad_semisimple(L.ad(x))) return false;
    hs.push_back(x);
    span.add(x);
    return true;
  };

  auto z = detail::centralizer(L, hs);
  while (z.size() > hs.size()) {
    bool grown = false;
    for (std::size_t k = 0; k < m && !grown; ++k) grown = add_if_toral({{k, Rational(1)}});
    if (grown) {
      cd.method = "greedy";
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> coef(-3, 3);
      for (int attempt = 0; attempt < 32 && !grown; ++attempt) {
        SparseVec<Rational> x;
        for (const auto& zv : z) axpy(x, Rational(coef(rng)), zv);
        grown = !x.empty() && add_if_toral(x);
      }
      if (!grown) throw NotAdapted("no toral element extends the Cartan candidate");
      cd.method = "random";
    }
    z = detail::centralizer(L, hs);
  }
  if (hs.empty()) throw NotAdapted("empty Cartan subalgebra");
  cd.cartan = hs;
  bool all_basis = true;
  for (const auto& h : hs) {
    if (h.size() == 1 && h.begin()->second == 1) cd.cartan_basis.push_back(h.begin()->first);
    else all_basis = false;
  }
  if (!all_basis) cd.cartan_basis.clear();
  return cd;
}

/// Simultaneous ad-eigendecomposition; roots over Q, or over Q(i) for non-split tori.
inline CartanData root_decomposition(const LieAlgebraPresentation& L, CartanData cd) {
  const std::size_t m = L.dim(), r = cd.rank();
  cd.roots.clear();
  cd.split = true;

  // Weight-adapted basis: every basis element is a joint eigenvector.
  bool adapted = true;
  std::vector<std::vector<Rational>> weights(m, std::vector<Rational>(r));
  for (std::size_t j = 0; j < m && adapted; ++j) {
    SparseVec<Rational> bj{{j, Rational(1)}};
    for (std::size_t t = 0; t < r && adapted; ++t) {
      SparseVec<Rational> img = L.bracket(cd.cartan[t], bj);
      if (img.empty()) continue;
      if (img.size() != 1 || img.begin()->first != j) adapted = false;
      else weights[j][t] = img.begin()->second;
    }
  }
  if (adapted) {
    std::size_t zero = 0;
    for (std::size_t j = 0; j < m; ++j) {
      bool z = std::all_of(weights[j].begin(), weights[j].end(), [](const Rational& x) { return x == 0; });
      if (z) {
        ++zero;
        continue;
      }
      RootSpace rs;
      for (const auto& w : weights[j]) rs.root.emplace_back(w);
      rs.vector = {{j, Gaussian(1)}};
      rs.basis_index = j;
      cd.roots.push_back(std::move(rs));
    }
    if (zero != r) throw NotAdapted("zero weight space larger than the Cartan subalgebra");
  } else {
    // Joint eigenspaces over Q(i).
    std::vector<GMatrix> ads;
    for (const auto& h : cd.cartan) ads.push_back(L.ad(h).cast<Gaussian>());
    struct Space {
      std::vector<std::vector<Gaussian>> basis;
      std::vector<Gaussian> weight;
    };
    std::vector<Space> spaces(1);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Gaussian> e(m);
      e[j] = Gaussian(1);
      spaces[0].basis.push_back(e);
    }
    for (std::size_t t = 0; t < r; ++t) {
      bool complete = false;
      auto eig = rational_or_imaginary_roots(charpoly(L.ad(cd.cartan[t])), &complete);
      if (!complete) throw NotAdapted("eigenvalues outside Q(i)");
      std::vector<Space> next;
      for (const auto& sp : spaces) {
        const std::size_t w = sp.basis.size();
        // ad_t restricted to the subspace, expressed in ambient coordinates.
        GMatrix img(m, w);
        for (std::size_t c = 0; c < w; ++c) {
          auto v = ads[t] * sp.basis[c];
          for (std::size_t k = 0; k < m; ++k) img(k, c) = v[k];
        }
        for (const auto& lam : eig) {
          GMatrix shifted = img;
          for (std::size_t c = 0; c < w; ++c)
            for (std::size_t k = 0; k < m; ++k) shifted(k, c) -= lam * sp.basis[c][k];
          auto ker = kernel(shifted);
          if (ker.empty()) continue;
          Space s;
          s.weight = sp.weight;
          s.weight.push_back(lam);
          for (const auto& kv : ker) {
            std::vector<Gaussian> v(m);
            for (std::size_t c = 0; c < w; ++c)
              if (!is_zero(kv[c]))
                for (std::size_t k = 0; k < m; ++k) v[k] += kv[c] * sp.basis[c][k];
            s.basis.push_back(std::move(v));
          }
          next.push_back(std::move(s));
        }
      }
      std::size_t total = 0;
      for (const auto& s : next) total += s.basis.size();
      if (total != m) throw NotAdapted("ad action is not diagonalizable");
      spaces = std::move(next);
    }
    for (auto& s : spaces) {
      bool z = std::all_of(s.weight.begin(), s.weight.end(), [](const Gaussian& x) { return is_zero(x); });
      if (z) {
        if (s.basis.size() != r) throw NotAdapted("zero weight space larger than the Cartan subalgebra");
        continue;
      }
      if (s.basis.size() != 1) throw NotAdapted("root space of dimension > 1");
      RootSpace rs;
      rs.root = s.weight;
      rs.vector = to_sparse(s.basis[0]);
      if (rs.vector.size() == 1) rs.basis_index = rs.vector.begin()->first;
      for (const auto& x : rs.root) cd.split = cd.split && x.is_real();
      cd.roots.push_back(std::move(rs));
    }
  }
  return cd;
}

inline CartanData cartan_data(const LieAlgebraPresentation& L, std::uint64_t seed = 1) {
  return root_decomposition(L, cartan_subalgebra(L, seed));
}

// ---- type identification ----

struct TypeReport {
  std::vector<std::string> labels;
  IntMatrix cartan_matrix;
  std::vector<std::size_t> simple_roots;  // indices into CartanData::roots
  std::size_t positive_roots = 0;
};

namespace detail {

/// Lexicographic order on (re_0, im_0, re_1, im_1, ...).
inline int lex_sign(const std::vector<Gaussian>& v) {
  for (const auto& x : v) {
    if (int s = sgn(x.re)) return s;
    if (int s = sgn(x.im)) return s;
  }
  return 0;
}

inline bool lex_less(const std::vector<Gaussian>& a, const std::vector<Gaussian>& b) {
  std::vector<Gaussian> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
  return lex_sign(d) > 0;
}

}  // namespace detail

/// Simple roots from the lexicographic positive system; Cartan integers from
/// the Killing inner product (alpha, beta) = a^T K_h^{-1} b, K_h = sum over roots of a a^T.
inline TypeReport identify(const CartanData& cd) {
  const std::size_t r = cd.rank();
  TypeReport rep;
  GMatrix kh(r, r);
  for (const auto& rs : cd.roots)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) kh(a, b) += rs.root[a] * rs.root[b];
  auto kinv = inverse(kh);
  if (!kinv) throw NotSemisimple();
  auto ip = [&](const std::vector<Gaussian>& a, const std::vector<Gaussian>& b) {
    return std::inner_product(a.begin(), a.end(), (*kinv * b).begin(), Gaussian(0));
  };

  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < cd.roots.size(); ++k)
    if (detail::lex_sign(cd.roots[k].root) > 0) pos.push_back(k);
  rep.positive_roots = pos.size();
  if (2 * pos.size() != cd.roots.size()) throw std::logic_error("root set is not symmetric");
  auto cmp = [](const std::vector<Gaussian>& a, const std::vector<Gaussian>& b) { return detail::lex_less(a, b); };
  std::set<std::vector<Gaussian>, decltype(cmp)> posset(cmp);
  for (auto k : pos) posset.insert(cd.roots[k].root);
  for (auto k : pos) {
    bool decomposable = false;
    for (auto a : pos) {
      std::vector<Gaussian> diff(r);
      for (std::size_t t = 0; t < r; ++t) diff[t] = cd.roots[k].root[t] - cd.roots[a].root[t];
      if (posset.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rep.simple_roots.push_back(k);
  }
  if (rep.simple_roots.size() != r) throw std::logic_error("simple root count differs from the rank");

  rep.cartan_matrix.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto& ai = cd.roots[rep.simple_roots[i]].root;
      const auto& aj = cd.roots[rep.simple_roots[j]].root;
      Gaussian v = Gaussian(2) * ip(ai, aj) / ip(aj, aj);
      if (!v.is_real() || v.re.get_den() != 1 || !v.re.get_num().fits_sint_p())
        throw std::logic_error("non-crystallographic Cartan integer " + to_string(v));
      rep.cartan_matrix[i][j] = static_cast<int>(v.re.get_num().get_si());
    }
  auto comps = dynkin_components(rep.cartan_matrix);
  std::size_t expected = 0;
  for (const auto& c : comps) {
    if (!matches_canonical(rep.cartan_matrix, c)) throw std::logic_error("component does not match " + c.type.label());
    expected += static_cast<std::size_t>(positive_root_count(c.type));
    rep.labels.push_back(c.type.label());
  }
  if (expected != pos.size()) throw std::logic_error("positive root count disagrees with the Dynkin type");
  return rep;
}

inline std::vector<std::string> identify_type(const CartanData& cd) { return identify(cd).labels; }

// ---- group action ----

/// exp(M) v = sum_k M^k v / k! for nilpotent M; budget bounds the number of terms.
template <class T>
std::vector<T> exp_nilpotent_action(const Matrix<T>& m, std::vector<T> v, std::size_t budget = 0) {
  const std::size_t d = m.rows();
  if (d != m.cols() || v.size() != d) throw std::invalid_argument("exp_nilpotent_action: dimension mismatch");
  Matrix<T> p = m;
  for (std::size_t e = 1; e < d; e *= 2) p = p * p;
  if (!p.is_zero()) throw std::invalid_argument("exp_nilpotent_action: matrix is not nilpotent");
  if (budget == 0) budget = d;
  std::vector<T> out = v, term = v;
  for (std::size_t k = 1;; ++k) {
    term = m * term;
    bool zero = std::all_of(term.begin(), term.end(), [](const T& x) { return is_zero(x); });
    if (zero) break;
    if (k > budget) throw std::invalid_argument("exp_nilpotent_action: budget below nilpotency index");
    T inv = T(make_rational(1, static_cast<long>(k)));
    for (auto& x : term) x *= inv;
    for (std::size_t i = 0; i < d; ++i) out[i] += term[i];
  }
  return out;
}

/// Cone points g.v0 for g a product of root-group elements with seeded coefficients.
inline std::vector<std::vector<Gaussian>> orbit_points(const LieAlgebraPresentation& L, const CartanData& cd,
                                                       const std::vector<Gaussian>& base, std::size_t count,
                                                       std::uint64_t seed, std::size_t steps = 3) {
  if (cd.roots.empty()) throw std::invalid_argument("orbit_points: no root vectors");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, cd.roots.size() - 1);
  const Rational coeffs[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), make_rational(1, 2), make_rational(-1, 2)};
  std::uniform_int_distribution<int> pc(0, 5);
  std::vector<std::vector<Gaussian>> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Gaussian> v = base;
    for (std::size_t t = 0; t < steps; ++t) {
      const auto& rs = cd.roots[pick(rng)];
      GMatrix mat = L.rho(rs.vector);
      Gaussian c(coeffs[pc(rng)]);
      for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) mat(i, j) *= c;
      v = exp_nilpotent_action(mat, v);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---- block structure ----

/// M = [[P, Q], [R, -P^T]] with P = [[lam0, a2^T], [a1, A]], Q = [[nu, c^T], [c, C]],
/// R = [[mu, b^T], [b, B]] in a Darboux basis.
struct BlockView {
  Rational lam0, mu, nu;
  std::vector<Rational> a1, a2, b, c;
  QMatrix A, B, C;

  bool base_point_fixed() const {
    return mu == 0 && nu == 0 && std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == 0; });
  }
};

inline BlockView block_view(const QMatrix& m, std::size_t n) {
  if (n == 0 || m.rows() != 2 * n || m.cols() != 2 * n) throw std::invalid_argument("block_view: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, n + j) != m(j, n + i) || m(n + i, j) != m(n + j, i) || m(n + i, n + j) != -m(j, i))
        throw std::invalid_argument("block_view: matrix is not in sp for the standard form");
    }
  BlockView bv;
  const std::size_t k = n - 1;
  bv.lam0 = m(0, 0);
  bv.nu = m(0, n);
  bv.mu = m(n, 0);
  bv.a1.resize(k);
  bv.a2.resize(k);
  bv.b.resize(k);
  bv.c.resize(k);
  bv.A = QMatrix(k, k);
  bv.B = QMatrix(k, k);
  bv.C = QMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    bv.a1[i] = m(1 + i, 0);
    bv.a2[i] = m(0, 1 + i);
    bv.c[i] = m(1 + i, n);
    bv.b[i] = m(n + 1 + i, 0);
    for (std::size_t j = 0; j < k; ++j) {
      bv.A(i, j) = m(1 + i, 1 + j);
      bv.C(i, j) = m(1 + i, n + 1 + j);
      bv.B(i, j) = m(n + 1 + i, 1 + j);
    }
  }
  return bv;
}

/// rho images conjugated into a Darboux basis P: P^{-1} M P.
inline QMatrix to_darboux(const QMatrix& m, const QMatrix& p) {
  auto inv = inverse(p);
  if (!inv) throw std::invalid_argument("to_darboux: singular change of basis");
  return *inv * m * p;
}

}  // namespace legvar
