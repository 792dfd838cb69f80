// Example varieties: generated fixtures and bundled equation lists.
#pragma once

#include "legvar/io.hpp"
#include "legvar/legendrian.hpp"
#include "legvar/liealg.hpp"

#include "legvar/data_files.hpp"  // generated at configure time from data/*.txt

#include <functional>
#include <map>
#include <regex>
#include <string>
#include <vector>

namespace legvar {

struct CatalogEntry {
  VarietyPresentation presentation;
  std::string source;                 // "generated" | "transcribed"
  std::vector<Gaussian> base_point;   // a cone point annihilated by every generator
  std::string note;
  VarNames names;
  std::optional<std::uint64_t> checksum;
  std::vector<std::string> metadata;
};

class DataCorruption : public std::runtime_error {
 public:
  explicit DataCorruption(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::vector<Gaussian> unit_point(std::size_t d, std::size_t i) {
  std::vector<Gaussian> v(d);
  v.at(i) = Gaussian(1);
  return v;
}

inline ParsedInput load_bundled(std::string_view text, std::uint64_t expected, const std::string& name) {
  if (fnv1a(text) != expected) throw DataCorruption(name + ": checksum mismatch in bundled data");
  return parse_input(text);
}

/// Pfaffian of the principal submatrix of a skew matrix on the given indices.
inline Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& a, const std::vector<std::size_t>& idx,
                           std::size_t nvars) {
  if (idx.empty()) return Polynomial(nvars, Rational(1));
  Polynomial out(nvars);
  const std::size_t i0 = idx[0];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    Polynomial term = a[i0][idx[k]] * pfaffian(a, rest, nvars);
    if (k % 2 == 0) out -= term;
    else out += term;
  }
  return out;
}

/// 3x3 determinant of polynomial entries.
inline Polynomial det3(const std::vector<std::vector<Polynomial>>& m) {
  auto t = [&](int a, int b, int c) { return m[0][a] * m[1][b] * m[2][c]; };
  return t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(2, 1, 0) - t(0, 2, 1) - t(1, 0, 2);
}

/// Plücker coordinate x_{ijk} (1-based column labels, in the given order) of the
/// row space of [I | B], B given as polynomials.
inline Polynomial plucker(const std::vector<std::vector<Polynomial>>& b, const std::string& label, std::size_t m) {
  std::vector<std::vector<Polynomial>> cols(3, std::vector<Polynomial>(3, Polynomial(m)));
  for (int k = 0; k < 3; ++k) {
    int c = label[k] - '1';
    for (int r = 0; r < 3; ++r)
      cols[r][k] = c < 3 ? Polynomial(m, Rational(r == c ? 1 : 0)) : b[r][c - 3];
  }
  return det3(cols);
}

}  // namespace detail

inline constexpr std::uint64_t kE7Checksum = 0x1d3183b1cc0113dcull;
inline constexpr std::uint64_t kGr36Checksum = 0x20499394ec013c30ull;
inline constexpr std::uint64_t kGrL36Checksum = 0xd37e69a6a6d6fda6ull;

/// The form as printed for the twisted cubic.
inline SymplecticForm twisted_cubic_printed_form() {
  QMatrix j(4, 4);
  j(0, 3) = -1;
  j(1, 2) = 3;
  j(2, 1) = -3;
  j(3, 0) = 1;
  return SymplecticForm(j);
}

/// The twisted cubic uses -1/3 of the printed form; its dual is the printed
/// dual matrix, so the bracket table comes out as displayed.
inline CatalogEntry twisted_cubic() {
  CatalogEntry e;
  auto& v = e.presentation;
  v.name = "twisted-cubic";
  v.nvars = 4;
  QMatrix j(4, 4);
  j(0, 3) = make_rational(1, 3);
  j(1, 2) = -1;
  j(2, 1) = 1;
  j(3, 0) = make_rational(-1, 3);
  v.form = SymplecticForm(j);
  v.generators = {parse_poly("x2^2 - x1*x3", 4), parse_poly("x0*x2 - x1^2", 4), parse_poly("x0*x3 - x1*x2", 4)};
  v.parametrization = std::vector<Polynomial>{parse_poly("x0^3", 2), parse_poly("x0^2*x1", 2),
                                              parse_poly("x0*x1^2", 2), parse_poly("x1^3", 2)};
  v.expected_algebra = {"A1"};
  v.expected_dim = 2;
  e.source = "generated";
  e.base_point = detail::unit_point(4, 0);
  e.names = {"x0", "x1", "x2", "x3"};
  e.note = "generators f+, f-, h'";
  return e;
}

/// Labels of so_n for n >= 3.
inline std::vector<std::string> so_labels(std::size_t n) {
  if (n == 3) return {"A1"};
  if (n == 4) return {"A1", "A1"};
  if (n == 5) return {"B2"};
  if (n == 6) return {"A3"};
  if (n % 2) return {"B" + std::to_string((n - 1) / 2)};
  return {"D" + std::to_string(n / 2)};
}

/// P^1 x Q^{n-2} in P^{2n-1}: generators f_ij (i < j), g+, g-, h.
inline CatalogEntry segre_line_quadric(std::size_t n) {
  if (n < 3) throw std::invalid_argument("segre_line_quadric: n must be at least 3");
  CatalogEntry e;
  auto& v = e.presentation;
  const std::size_t d = 2 * n;
  v.name = "segre-" + std::to_string(n);
  v.nvars = d;
  v.form = standard_form(n);
  auto x = [&](std::size_t i) { return Polynomial::var(d, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v.generators.push_back(x(i) * x(n + j) - x(j) * x(n + i));
  Polynomial gp(d), gm(d), h(d);
  for (std::size_t k = 0; k < n; ++k) {
    gp += x(n + k) * x(n + k) * make_rational(1, 2);
    gm -= x(k) * x(k) * make_rational(1, 2);
    h += x(k) * x(n + k);
  }
  v.generators.push_back(gp);
  v.generators.push_back(gm);
  v.generators.push_back(h);
  v.expected_algebra = {"A1"};
  for (const auto& l : so_labels(n)) v.expected_algebra.push_back(l);
  std::sort(v.expected_algebra.begin(), v.expected_algebra.end(),
            [](const std::string& a, const std::string& b) { return parse_type(a) < parse_type(b); });
  v.expected_dim = n;
  e.source = "generated";
  e.base_point.assign(d, Gaussian(0));
  e.base_point[0] = Gaussian(1);
  e.base_point[1] = Gaussian::i_unit();  // (1 : i : 0 ...) on y^T y = 0
  e.note = "base point over Q(i): the quadric y^T y = 0 has no rational points";
  return e;
}

/// Index of f_ij (i < j) in segre_line_quadric(n).generators.
inline std::size_t segre_f_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw std::invalid_argument("segre_f_index: need i < j < n");
  std::size_t k = 0;
  for (std::size_t a = 0; a < i; ++a) k += n - 1 - a;
  return k + (j - i - 1);
}

inline CatalogEntry grassmannian_36() {
  ParsedInput in = detail::load_bundled(data::gr36, kGr36Checksum, "gr36");
  CatalogEntry e;
  auto& v = e.presentation;
  v = to_presentation(in, "gr36");
  v.expected_algebra = {"A5"};
  v.expected_dim = 10;
  // Row space of [I | B], 9 parameters.
  const std::size_t m = 9;
  std::vector<std::vector<Polynomial>> b(3, std::vector<Polynomial>(3));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) b[r][c] = Polynomial::var(m, 3 * r + c);
  std::vector<Polynomial> phi;
  for (const auto& name : in.names) phi.push_back(detail::plucker(b, name.substr(1), m));
  v.parametrization = phi;
  e.source = "transcribed";
  e.checksum = kGr36Checksum;
  e.names = in.names;
  e.base_point = detail::unit_point(20, 0);
  e.note = "Pluecker coordinates named as listed; variable k pairs with k+10";
  return e;
}

/// y_k as signed multiples of Pluecker coordinates: y_k = coef * x_label (first listed relation).
inline const std::vector<std::pair<std::string, Rational>>& lagrangian_coordinates() {
  static const std::vector<std::pair<std::string, Rational>> table = {
      {"x123", 1}, {"x126", 1}, {"x135", 1}, {"x243", 1}, {"x124", 1}, {"x125", 1}, {"x134", 1},
      {"x456", 1}, {"x354", 1}, {"x264", 1}, {"x156", 1}, {"x365", 2}, {"x346", 2}, {"x256", 2}};
  return table;
}

/// Linear relations cutting Gr_L out of Gr: x_a = s * x_b.
inline const std::vector<std::tuple<std::string, std::string, Rational>>& lagrangian_relations() {
  static const std::vector<std::tuple<std::string, std::string, Rational>> rel = {
      {"x263", "x124", -1}, {"x136", "x125", -1}, {"x235", "x134", -1},
      {"x145", "x365", -1}, {"x245", "x346", -1}, {"x146", "x256", -1}};
  return rel;
}

/// Substitutes the Lagrangian relations into the Gr(3,6) quadrics, giving
/// polynomials in y0..y13.
inline std::vector<Polynomial> lagrangian_substitution(const CatalogEntry& gr) {
  const auto& names = gr.names;
  std::map<std::string, Polynomial> img;
  const auto& coords = lagrangian_coordinates();
  for (std::size_t k = 0; k < coords.size(); ++k)
    img[coords[k].first] = Polynomial::var(14, k) * (1 / coords[k].second);
  for (const auto& [a, b, s] : lagrangian_relations()) img[a] = img.at(b) * s;
  std::vector<Polynomial> images;
  for (const auto& nm : names) images.push_back(img.at(nm));
  std::vector<Polynomial> out;
  for (const auto& g : gr.presentation.generators) out.push_back(substitute(g, images));
  return out;
}

inline CatalogEntry lagrangian_grassmannian_36(bool cross_check = true) {
  ParsedInput in = detail::load_bundled(data::grl36, kGrL36Checksum, "grl36");
  CatalogEntry e;
  auto& v = e.presentation;
  v = to_presentation(in, "grl36");
  v.expected_algebra = {"C3"};
  v.expected_dim = 7;
  if (cross_check) {
    auto sub = lagrangian_substitution(grassmannian_36());
    SparseEchelon<Rational> a(14 * 14), both(14 * 14);
    for (const auto& g : v.generators) {
      a.add(detail::quadric_coords(g));
      both.add(detail::quadric_coords(g));
    }
    for (const auto& g : sub)
      if (!g.is_zero()) both.add(detail::quadric_coords(g));
    SparseEchelon<Rational> s(14 * 14);
    for (const auto& g : sub)
      if (!g.is_zero()) s.add(detail::quadric_coords(g));
    if (a.rank() != 21 || s.rank() != 21 || both.rank() != 21)
      throw DataCorruption("grl36: substitution cross-check does not reproduce the quadric span");
  }
  // Row space of [I | S] with S symmetric, 6 parameters.
  const std::size_t m = 6;
  auto s = [&](std::size_t k) { return Polynomial::var(m, k); };
  std::vector<std::vector<Polynomial>> b = {{s(0), s(1), s(2)}, {s(1), s(3), s(4)}, {s(2), s(4), s(5)}};
  std::vector<Polynomial> phi;
  for (const auto& [label, c] : lagrangian_coordinates()) phi.push_back(detail::plucker(b, label.substr(1), m) * c);
  v.parametrization = phi;
  e.source = "transcribed";
  e.checksum = kGrL36Checksum;
  e.base_point = detail::unit_point(14, 0);
  e.note = "y_i pairs with y_{7+i}";
  return e;
}

/// Variable index of m_ij (i < j) in the spinor fixture; n_ij is 16 more.
inline std::size_t spinor_m_index(std::size_t i, std::size_t j) {
  if (i >= j || j >= 6) throw std::invalid_argument("spinor_m_index: need i < j < 6");
  std::size_t k = 0;
  for (std::size_t a = 0; a < i; ++a) k += 5 - a;
  return 1 + k + (j - i - 1);
}

namespace detail {

/// (Pf_A)_{ij} = (-1)^{i+j+1} Pf(A without rows and columns i, j).
inline std::vector<std::vector<Polynomial>> pf_adjugate(const std::vector<std::vector<Polynomial>>& a,
                                                        std::size_t nv) {
  std::vector<std::vector<Polynomial>> out(6, std::vector<Polynomial>(6, Polynomial(nv)));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < 6; ++k)
        if (k != i && k != j) rest.push_back(k);
      Polynomial p = pfaffian(a, rest, nv);
      if ((i + j) % 2 == 0) p = -p;
      out[i][j] = p;
      out[j][i] = -p;
    }
  return out;
}

inline std::vector<std::vector<Polynomial>> skew_from(std::size_t nv, std::size_t offset,
                                                      const std::function<Polynomial(std::size_t)>& entry) {
  std::vector<std::vector<Polynomial>> a(6, std::vector<Polynomial>(6, Polynomial(nv)));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      a[i][j] = entry(spinor_m_index(i, j) - 1 + offset);
      a[j][i] = -a[i][j];
    }
  return a;
}

}  // namespace detail

/// The spinor variety S_6 in P^31: MN = xy Id, Pf_M = -xN, Pf_N = yM.
inline CatalogEntry spinor_s6() {
  const std::size_t d = 32;
  CatalogEntry e;
  auto& v = e.presentation;
  v.name = "spinor-s6";
  v.nvars = d;
  v.form = standard_form(16);
  Polynomial x = Polynomial::var(d, 0), y = Polynomial::var(d, 16);
  auto M = detail::skew_from(d, 1, [&](std::size_t k) { return Polynomial::var(d, k); });
  auto N = detail::skew_from(d, 17, [&](std::size_t k) { return Polynomial::var(d, k); });
  auto pfm = detail::pf_adjugate(M, d), pfn = detail::pf_adjugate(N, d);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Polynomial s(d);
      for (std::size_t k = 0; k < 6; ++k) s += M[i][k] * N[k][j];
      if (i == j) s -= x * y;
      gens.push_back(s);
    }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) gens.push_back(pfm[i][j] + x * N[i][j]);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) gens.push_back(pfn[i][j] - y * M[i][j]);
  VarietyPresentation tmp;
  tmp.nvars = d;
  tmp.generators = gens;
  v.generators = quadratic_part(tmp);
  if (v.generators.size() != 66) throw std::logic_error("spinor_s6: quadric span has dimension " +
                                                        std::to_string(v.generators.size()) + ", expected 66");
  // x = 1, M = A, N = -Pf_A, y = Pf(A); 15 parameters.
  const std::size_t m = 15;
  auto A = detail::skew_from(m, 0, [&](std::size_t k) { return Polynomial::var(m, k); });
  auto pfa = detail::pf_adjugate(A, m);
  std::vector<Polynomial> phi(d, Polynomial(m));
  phi[0] = Polynomial(m, Rational(1));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      phi[spinor_m_index(i, j)] = A[i][j];
      phi[16 + spinor_m_index(i, j)] = -pfa[i][j];
    }
  phi[16] = detail::pfaffian(A, {0, 1, 2, 3, 4, 5}, m);
  v.parametrization = phi;
  v.expected_algebra = {"D6"};
  v.expected_dim = 16;
  e.source = "generated";
  e.base_point = detail::unit_point(d, 0);
  e.names.push_back("x");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) e.names.push_back("m" + std::to_string(i) + std::to_string(j));
  e.names.push_back("y");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) e.names.push_back("n" + std::to_string(i) + std::to_string(j));
  e.note = "x, m_ij pair with y, n_ij";
  return e;
}

inline CatalogEntry e7_variety() {
  ParsedInput in = detail::load_bundled(data::e7, kE7Checksum, "e7");
  CatalogEntry e;
  auto& v = e.presentation;
  v = to_presentation(in, "e7");
  v.expected_algebra = {"E7"};
  v.expected_dim = 28;
  e.source = "transcribed";
  e.checksum = kE7Checksum;
  e.base_point = detail::unit_point(56, 0);
  e.note = "x_i pairs with x_{28+i}";
  return e;
}

// ---- X_f ----

/// Homogeneous forms of degree <= max_degree vanishing on the image of phi,
/// modulo multiples of lower-degree ones.
inline std::vector<Polynomial> implicitize(const std::vector<Polynomial>& phi, unsigned max_degree) {
  const std::size_t d = phi.size();
  std::vector<Polynomial> gens;
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    // Monomials of degree deg in d variables.
    std::vector<Monomial> mons;
    std::vector<std::uint16_t> e(d, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == d) {
        e[i] = static_cast<std::uint16_t>(left);
        mons.emplace_back(e);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[i] = static_cast<std::uint16_t>(k);
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, deg);
    // Coefficient map monomial -> substituted polynomial, column by column.
    std::map<Monomial, std::size_t, GrevlexDesc> rowidx(GrevlexDesc{});
    std::vector<SparseVec<Rational>> cols;
    for (const auto& mo : mons) {
      Polynomial img = substitute(Polynomial::term(mo, 1), phi);
      SparseVec<Rational> col;
      for (const auto& [pm, c] : img.terms()) {
        auto it = rowidx.emplace(pm, rowidx.size()).first;
        col[it->second] = c;
      }
      cols.push_back(std::move(col));
    }
    SparseEchelon<Rational> ech(mons.size());
    std::map<std::size_t, SparseVec<Rational>> rows;
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [r, c] : cols[j]) rows[r][j] = c;
    for (const auto& [r, row] : rows) ech.add(row);
    // Span of lower-degree generators times monomials.
    SparseEchelon<Rational> known(mons.size());
    std::map<Monomial, std::size_t, GrevlexDesc> monidx(GrevlexDesc{});
    for (std::size_t k = 0; k < mons.size(); ++k) monidx.emplace(mons[k], k);
    auto to_vec = [&](const Polynomial& p) {
      SparseVec<Rational> s;
      for (const auto& [pm, c] : p.terms()) s[monidx.at(pm)] = c;
      return s;
    };
    for (const auto& g : gens) {
      unsigned gd = static_cast<unsigned>(g.degree());
      std::vector<Monomial> mult;
      std::vector<std::uint16_t> f(d, 0);
      auto rec2 = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == d) {
          f[i] = static_cast<std::uint16_t>(left);
          mult.emplace_back(f);
          return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
          f[i] = static_cast<std::uint16_t>(k);
          self(self, i + 1, left - k);
        }
      };
      rec2(rec2, 0, deg - gd);
      for (const auto& mm : mult) {
        Polynomial q(d);
        q.add_scaled(1, mm, g);
        known.add(to_vec(q));
      }
    }
    for (const auto& kv : ech.kernel()) {
      if (!known.add(kv)) continue;
      Polynomial p(d);
      for (const auto& [k, c] : kv) p.add_term(mons[k], c);
      gens.push_back(p);
    }
  }
  return gens;
}

/// X_f for f homogeneous in n-1 variables: phi(y) = (1, y, (k-2) f, -df).
inline CatalogEntry x_f(const Polynomial& f, unsigned implicit_degree = 3) {
  auto k = f.homogeneous_degree();
  if (f.is_zero() || !k) throw std::invalid_argument("x_f: f must be a nonzero homogeneous polynomial");
  const std::size_t m = f.nvars(), n = m + 1, d = 2 * n;
  CatalogEntry e;
  auto& v = e.presentation;
  VarNames ynames;
  for (std::size_t i = 0; i < m; ++i) ynames.push_back("y" + std::to_string(i + 1));
  v.name = "xf:" + to_string(f, ynames);
  v.nvars = d;
  v.form = standard_form(n);
  std::vector<Polynomial> phi;
  phi.emplace_back(m, Rational(1));
  for (std::size_t i = 0; i < m; ++i) phi.push_back(Polynomial::var(m, i));
  phi.push_back(f * Rational(static_cast<long>(*k) - 2));
  for (std::size_t i = 0; i < m; ++i) phi.push_back(-partial_derivative(f, i));
  v.parametrization = phi;
  v.expected_dim = n;
  // y1 y2 (y1 + y2): the listed equations.
  Polynomial f3 = m == 2 ? parse_poly("y1*y2*(y1+y2)", 2, ynames) : Polynomial(m);
  if (m == 2 && f == f3) {
    for (const char* s : {"x0*x5 + x1^2 + 2*x1*x2", "x0*x4 + 2*x1*x2 + x2^2", "3*x0*x3 + x1*x4 + x2*x5",
                          "x1*x4^2 - 2*x1*x4*x5 + 9*x2^2*x3 - 5*x2*x4*x5 + 4*x2*x5^2",
                          "x1*x3*x4 - 2*x1*x3*x5 + 2*x2*x3*x4 - x2*x3*x5 - x4^2*x5 + x4*x5^2"})
      v.generators.push_back(parse_poly(s, d));
    e.source = "transcribed";
    e.note = "listed equations";
  } else {
    v.generators = implicitize(phi, implicit_degree);
    e.source = "generated";
    e.note = "equations by interpolation up to degree " + std::to_string(implicit_degree);
  }
  std::vector<Rational> zero(m);
  for (const auto& p : phi) e.base_point.emplace_back(evaluate(p, zero));
  return e;
}

/// Two quadrics and a cubic in (u0, u1, u2, v0, v1, v2), u_k paired with v_k.
inline CatalogEntry complete_intersection_complex() {
  CatalogEntry e;
  auto& v = e.presentation;
  v.name = "ci-complex";
  v.nvars = 6;
  v.form = standard_form(3);
  e.names = {"u0", "u1", "u2", "v0", "v1", "v2"};
  for (const char* s : {"u0*v0 - u1*v1", "u0*v0 - u2*v2", "u0*u1*u2 - v0*v1*v2"})
    v.generators.push_back(parse_poly(s, 6, e.names));
  v.expected_dim = 3;
  e.source = "generated";
  e.base_point.assign(6, Gaussian(1));
  e.metadata = {"u0=v0=u1=v2=0", "u0=v0=v1=u2=0", "u1=v1=u0=v2=0",
                "u1=v1=v0=u2=0", "u2=v2=u0=v1=0", "u2=v2=v0=u1=0"};
  e.note = "singular along six lines";
  return e;
}

inline CatalogEntry four_lines() {
  CatalogEntry e;
  auto& v = e.presentation;
  v.name = "four-lines";
  v.nvars = 4;
  v.form = standard_form(2);
  v.generators = {parse_poly("x0*x2", 4), parse_poly("x1*x3", 4)};
  v.expected_dim = 2;
  e.source = "generated";
  e.base_point = detail::unit_point(4, 0);
  e.note = "reducible: four coordinate lines";
  return e;
}

inline std::vector<std::string> catalog_names() {
  return {"twisted-cubic", "four-lines", "segre-3",  "segre-4", "segre-5", "gr36",       "grl36",
          "spinor-s6",     "e7",         "xf2-y1^3", "xf-y1^2y2", "xf-y1y2(y1+y2)", "ci-complex"};
}

/// Looks up an entry by name; "segre-<n>" and "xf-<poly in y1, y2, ...>" are parametric.
/// "xf<m>-<poly>" fixes the number of y variables to m.
inline CatalogEntry catalog_entry(const std::string& name) {
  if (name == "twisted-cubic") return twisted_cubic();
  if (name == "four-lines") return four_lines();
  if (name == "gr36") return grassmannian_36();
  if (name == "grl36") return lagrangian_grassmannian_36();
  if (name == "spinor-s6") return spinor_s6();
  if (name == "e7") return e7_variety();
  if (name == "ci-complex") return complete_intersection_complex();
  if (name.rfind("segre-", 0) == 0) return segre_line_quadric(std::stoul(name.substr(6)));
  std::smatch xm;
  if (std::regex_match(name, xm, std::regex("xf([0-9]*)-(.+)"))) {
    std::string body = xm[2];
    std::size_t m = 0;
    std::regex yre("y([0-9]+)");
    for (auto it = std::sregex_iterator(body.begin(), body.end(), yre); it != std::sregex_iterator(); ++it)
      m = std::max<std::size_t>(m, std::stoul((*it)[1]));
    if (m == 0) throw std::invalid_argument("xf: polynomial must use variables y1, y2, ...");
    if (xm[1].length()) {
      std::size_t given = std::stoul(xm[1]);
      if (given < m) throw std::invalid_argument("xf: variable count below highest index used");
      m = given;
    }
    VarNames ynames;
    for (std::size_t i = 0; i < m; ++i) ynames.push_back("y" + std::to_string(i + 1));
    return x_f(parse_poly(body, m, ynames));
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace legvar
