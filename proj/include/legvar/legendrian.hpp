// Legendrianity verdicts: bracket closure of the ideal, cone dimension,
// degeneracy, pointwise conormal and tangent checks, and the rational-curve ODE.
#pragma once

#include "legvar/groebner.hpp"
#include "legvar/linalg.hpp"
#include "legvar/symplectic.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace legvar {

/// A projective variety X in P(V) given by homogeneous generators of its ideal.
struct VarietyPresentation {
  std::string name;
  std::size_t nvars = 0;
  SymplecticForm form;
  std::vector<Polynomial> generators;
  /// Optional polynomial map Q^m -> V whose image spans the cone (affine chart or homogeneous).
  std::optional<std::vector<Polynomial>> parametrization;
  std::vector<std::string> expected_algebra;
  std::optional<std::size_t> expected_dim;

  std::size_t n() const { return nvars / 2; }
  std::size_t nparams() const {
    return parametrization && !parametrization->empty() ? parametrization->front().nvars() : 0;
  }
  void validate() const {
    if (nvars == 0 || nvars != form.dim()) throw std::invalid_argument(name + ": form and nvars disagree");
    for (const auto& g : generators) {
      if (g.nvars() != nvars) throw std::invalid_argument(name + ": generator over wrong ring");
      if (!g.is_homogeneous()) throw std::invalid_argument(name + ": inhomogeneous generator");
    }
    if (parametrization && parametrization->size() != nvars)
      throw std::invalid_argument(name + ": parametrization has wrong number of components");
  }
};

enum class Verdict { legendrian, not_legendrian, undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::legendrian: return "legendrian";
    case Verdict::not_legendrian: return "not-legendrian";
    default: return "undecided";
  }
}

struct Witness {
  std::string kind;  // "bracket", "dimension", "budget"
  std::size_t i = 0, j = 0;
  std::string detail;
};

struct ClosureReport {
  enum class Status { closed, not_closed, undecided } status = Status::closed;
  std::vector<Witness> failing;
  GroebnerBasis basis;
};

struct LegendrianVerdict {
  std::optional<bool> bracket_closed;
  std::optional<std::size_t> cone_dimension;
  bool degenerate = false;
  std::optional<Polynomial> linear_form;
  Verdict verdict = Verdict::undecided;
  std::vector<Witness> witnesses;
  /// Irreducible components are not separated; only the total dimension is compared with n.
  bool equidimensionality_checked = false;
  std::size_t pairs_processed = 0;
};

/// Brackets every unordered generator pair and reduces modulo the Groebner basis.
inline ClosureReport bracket_closure_check(const VarietyPresentation& v, const GroebnerOptions& opt = {}) {
  v.validate();
  if (v.generators.empty()) throw std::invalid_argument("bracket_closure_check: no generators");
  ClosureReport rep;
  rep.basis = buchberger(v.generators, v.nvars, opt);
  const auto& g = v.generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Polynomial r = normal_form(poisson_bracket(g[i], g[j], v.form), rep.basis);
      if (!r.is_zero()) rep.failing.push_back({rep.basis.complete ? "bracket" : "budget", i, j, to_string(r)});
    }
  if (!rep.basis.complete && !rep.failing.empty()) rep.status = ClosureReport::Status::undecided;
  else if (!rep.failing.empty()) rep.status = ClosureReport::Status::not_closed;
  return rep;
}

inline LegendrianVerdict legendrian_verdict(const VarietyPresentation& v, const GroebnerOptions& opt = {}) {
  LegendrianVerdict out;
  ClosureReport cl = bracket_closure_check(v, opt);
  out.pairs_processed = cl.basis.pairs_processed;
  if (!cl.basis.complete) {
    out.verdict = Verdict::undecided;
    out.witnesses = cl.failing;
    out.witnesses.push_back({"budget", 0, 0, "groebner pair budget exhausted"});
    return out;
  }
  out.bracket_closed = cl.status == ClosureReport::Status::closed;
  out.witnesses = cl.failing;
  auto lin = linear_part(cl.basis);
  out.degenerate = !lin.empty();
  if (out.degenerate) out.linear_form = lin.front();
  bool proper = true;
  for (const auto& e : cl.basis.elements)
    if (e.degree() == 0) proper = false;
  out.cone_dimension = proper ? krull_dimension(cl.basis) : 0;
  if (*out.cone_dimension != v.n())
    out.witnesses.push_back({"dimension", *out.cone_dimension, v.n(),
                             "cone dimension " + std::to_string(*out.cone_dimension) + " != n = " +
                                 std::to_string(v.n())});
  out.verdict = (*out.bracket_closed && *out.cone_dimension == v.n()) ? Verdict::legendrian
                                                                       : Verdict::not_legendrian;
  return out;
}

/// A degree-one element of the reduced basis, if X lies in a hyperplane.
inline std::optional<Polynomial> degeneracy_check(const VarietyPresentation& v, const GroebnerOptions& opt = {}) {
  auto gb = buchberger(v.generators, v.nvars, opt);
  if (!gb.complete) throw BudgetExceeded("degeneracy_check: groebner pair budget exhausted");
  auto lin = linear_part(gb);
  if (lin.empty()) return std::nullopt;
  return lin.front();
}

// ---- pointwise checks ----

enum class PointStatus { lagrangian, not_isotropic, rank_deficient };

inline const char* to_string(PointStatus s) {
  switch (s) {
    case PointStatus::lagrangian: return "lagrangian";
    case PointStatus::not_isotropic: return "not-isotropic";
    default: return "rank-deficient";
  }
}

template <class T>
Matrix<T> rows_to_matrix(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix<T> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

template <class T>
std::vector<T> gradient(const Polynomial& p, const std::vector<T>& point) {
  std::vector<T> g(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) g[i] = evaluate(partial_derivative(p, i), point);
  return g;
}

/// Conormal space at a cone point: generator gradients must have rank n and
/// be pairwise orthogonal under omega'.
template <class T>
PointStatus conormal_point_status(const VarietyPresentation& v, const std::vector<T>& point) {
  if (point.size() != v.nvars) throw std::invalid_argument("conormal check: point has wrong dimension");
  bool nonzero = false;
  for (const auto& x : point) nonzero = nonzero || !is_zero(x);
  if (!nonzero) throw std::invalid_argument("conormal check: zero point");
  for (const auto& g : v.generators)
    if (!is_zero(evaluate(g, point))) throw std::invalid_argument("conormal check: point not on the cone");
  std::vector<std::vector<T>> grads;
  for (const auto& g : v.generators) grads.push_back(gradient(g, point));
  if (rank(rows_to_matrix(grads, v.nvars)) != v.n()) return PointStatus::rank_deficient;
  for (std::size_t i = 0; i < grads.size(); ++i)
    for (std::size_t j = i + 1; j < grads.size(); ++j)
      if (!is_zero(v.form.dual_pairing(grads[i], grads[j]))) return PointStatus::not_isotropic;
  return PointStatus::lagrangian;
}

template <class T>
bool conormal_point_check(const VarietyPresentation& v, const std::vector<T>& point) {
  return conormal_point_status(v, point) == PointStatus::lagrangian;
}

/// Tangent space of the cone at phi(params): position and Jacobian columns
/// must span an n-dimensional space on which omega vanishes.
template <class T>
PointStatus tangent_point_status(const VarietyPresentation& v, const std::vector<T>& params) {
  if (!v.parametrization) throw std::invalid_argument("tangent check: no parametrization");
  const auto& phi = *v.parametrization;
  const std::size_t m = v.nparams();
  if (params.size() != m) throw std::invalid_argument("tangent check: wrong number of parameters");
  std::vector<std::vector<T>> vecs(m + 1, std::vector<T>(v.nvars));
  for (std::size_t c = 0; c < v.nvars; ++c) {
    vecs[0][c] = evaluate(phi[c], params);
    for (std::size_t k = 0; k < m; ++k) vecs[k + 1][c] = evaluate(partial_derivative(phi[c], k), params);
  }
  if (rank(rows_to_matrix(vecs, v.nvars)) != v.n()) return PointStatus::rank_deficient;
  for (std::size_t a = 0; a < vecs.size(); ++a)
    for (std::size_t b = a + 1; b < vecs.size(); ++b)
      if (!is_zero(v.form(vecs[a], vecs[b]))) return PointStatus::not_isotropic;
  return PointStatus::lagrangian;
}

template <class T>
bool tangent_point_check(const VarietyPresentation& v, const std::vector<T>& params) {
  return tangent_point_status(v, params) == PointStatus::lagrangian;
}

// ---- rational curves (1 : f1 : f2 : f3) ----

/// num / den in one variable t.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  RationalFunction() : num(1), den(1, Rational(1)) {}
  RationalFunction(Polynomial n) : num(std::move(n)), den(1, Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  }

  bool is_zero() const { return num.is_zero(); }
  RationalFunction derivative() const {
    return {partial_derivative(num, 0) * den - num * partial_derivative(den, 0), den * den};
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num * b.num, a.den * b.den};
  }
};

/// f1' = f2' f3 - f3' f2 identically.
inline bool rational_curve_check(const RationalFunction& f1, const RationalFunction& f2,
                                 const RationalFunction& f3) {
  for (const auto* f : {&f1, &f2, &f3})
    if (f->num.nvars() != 1 || f->den.nvars() != 1)
      throw std::invalid_argument("rational_curve_check: expected univariate functions");
  return (f1.derivative() - (f2.derivative() * f3 - f3.derivative() * f2)).is_zero();
}

/// The form under which (1 : f1 : f2 : f3) is legendrian iff the ODE holds.
inline SymplecticForm curve_form() {
  QMatrix j(4, 4);
  j(0, 1) = 1;
  j(1, 0) = -1;
  j(2, 3) = 1;
  j(3, 2) = -1;
  return SymplecticForm(j);
}

/// Cone over t -> (1 : f1 : f2 : f3) with denominators cleared.
inline VarietyPresentation curve_presentation(const RationalFunction& f1, const RationalFunction& f2,
                                              const RationalFunction& f3) {
  Polynomial d = f1.den * f2.den * f3.den;
  VarietyPresentation v;
  v.name = "rational-curve";
  v.nvars = 4;
  v.form = curve_form();
  v.parametrization = std::vector<Polynomial>{d, f1.num * f2.den * f3.den, f2.num * f1.den * f3.den,
                                              f3.num * f1.den * f2.den};
  return v;
}

/// Deterministic rational sample points with small numerators and denominators.
inline std::vector<std::vector<Rational>> sample_points(std::size_t dim, std::size_t count, std::uint64_t seed,
                                                        long max_num = 9, long max_den = 4) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  std::vector<std::vector<Rational>> pts;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < dim; ++i) p.push_back(make_rational(num(rng), den(rng)));
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace legvar
