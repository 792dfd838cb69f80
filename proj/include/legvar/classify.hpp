// Root systems, Weyl dimensions, Freudenthal multiplicities and the
// candidate enumeration over simple and two-factor semisimple algebras.
#pragma once

#include "legvar/dynkin.hpp"
#include "legvar/linalg.hpp"
#include "legvar/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace legvar {

/// Roots in simple-root coordinates; weights in fundamental-weight coordinates.
struct AbstractRootSystem {
  SimpleType type;
  IntMatrix cartan;                       // A_ij = <alpha_i, alpha_j^vee>
  std::vector<Rational> half_norm;        // (alpha_i, alpha_i) / 2, shortest = 1
  QMatrix simple_gram;                    // (alpha_i, alpha_j)
  QMatrix weight_gram;                    // (omega_i, omega_j)
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> weyl_vector;           // rho = sum of fundamental weights

  std::size_t rank() const { return cartan.size(); }
  std::string label() const { return type.label(); }

  /// (lambda, mu) for weights in fundamental-weight coordinates.
  Rational weight_product(const std::vector<int>& a, const std::vector<int>& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (a[i] && b[j]) s += a[i] * b[j] * weight_gram(i, j);
    return s;
  }
  /// Fundamental-weight coordinates of a root given in simple-root coordinates.
  std::vector<int> root_as_weight(const std::vector<int>& k) const {
    std::vector<int> w(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) w[j] += k[i] * cartan[i][j];
    return w;
  }
  /// (lambda, beta) for beta in simple-root coordinates: sum_j k_j m_j |alpha_j|^2 / 2.
  Rational pair_root(const std::vector<int>& lambda, const std::vector<int>& k) const {
    Rational s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += k[j] * lambda[j] * half_norm[j];
    return s;
  }
  Rational root_product(const std::vector<int>& a, const std::vector<int>& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (a[i] && b[j]) s += a[i] * b[j] * simple_gram(i, j);
    return s;
  }
};

inline AbstractRootSystem build_root_system(const SimpleType& t) {
  AbstractRootSystem rs;
  rs.type = t;
  rs.cartan = cartan_matrix(t);
  const std::size_t r = rs.rank();
  const IntMatrix& a = rs.cartan;

  // d_j A_ij = d_i A_ji along the (connected) diagram.
  rs.half_norm.assign(r, Rational(0));
  rs.half_norm[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (i != j && a[i][j] != 0 && rs.half_norm[i] != 0 && rs.half_norm[j] == 0) {
          rs.half_norm[j] = rs.half_norm[i] * a[j][i] / a[i][j];
          changed = true;
        }
  }
  Rational mn = *std::min_element(rs.half_norm.begin(), rs.half_norm.end());
  for (auto& d : rs.half_norm) d /= mn;

  rs.simple_gram = QMatrix(r, r);
  QMatrix am(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      rs.simple_gram(i, j) = a[i][j] * rs.half_norm[j];
      am(i, j) = a[i][j];
    }
  // omega = A^{-1} alpha, so (omega_i, omega_j) = (A^{-1})_ij d_j.
  auto inv = inverse(am);
  rs.weight_gram = QMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.weight_gram(i, j) = (*inv)(i, j) * rs.half_norm[j];

  // Positive roots by alpha-strings, level by level.
  std::map<std::vector<int>, int> known;
  std::vector<std::vector<int>> level;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    level.push_back(e);
  }
  while (!level.empty()) {
    for (const auto& b : level) {
      known.emplace(b, 1);
      rs.positive_roots.push_back(b);
    }
    std::vector<std::vector<int>> next;
    for (const auto& b : level)
      for (std::size_t i = 0; i < r; ++i) {
        int p = 0;
        for (std::vector<int> c = b;;) {
          --c[i];
          if (!known.count(c)) break;
          ++p;
        }
        int pairing = 0;  // <beta, alpha_i^vee>
        for (std::size_t j = 0; j < r; ++j) pairing += b[j] * a[j][i];
        if (p - pairing > 0) {
          std::vector<int> c = b;
          ++c[i];
          if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
        }
      }
    level = std::move(next);
  }
  if (static_cast<int>(rs.positive_roots.size()) != positive_root_count(t))
    throw std::logic_error("root generation for " + t.label() + " gave the wrong count");
  rs.weyl_vector.assign(r, 1);
  return rs;
}

inline AbstractRootSystem build_root_system(char letter, int rank) { return build_root_system(SimpleType{letter, rank}); }

inline void require_dominant(const AbstractRootSystem& rs, const std::vector<int>& w) {
  if (w.size() != rs.rank()) throw std::invalid_argument("weight has wrong length");
  for (int m : w)
    if (m < 0) throw std::invalid_argument("weight is not dominant");
}

inline Integer weyl_dimension(const AbstractRootSystem& rs, const std::vector<int>& lambda) {
  require_dominant(rs, lambda);
  Rational prod = 1;
  for (const auto& k : rs.positive_roots) {
    Rational num = 0, den = 0;
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      num += k[j] * (lambda[j] + 1) * rs.half_norm[j];
      den += k[j] * rs.half_norm[j];
    }
    prod *= num / den;
  }
  if (prod.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return prod.get_num();
}

/// 1 + #{alpha > 0 : (lambda, alpha) != 0}.
inline std::size_t cone_orbit_dimension(const AbstractRootSystem& rs, const std::vector<int>& lambda) {
  require_dominant(rs, lambda);
  std::size_t c = 1;
  for (const auto& k : rs.positive_roots)
    if (rs.pair_root(lambda, k) != 0) ++c;
  return c;
}

/// -w0(lambda) = lambda via the duality involution of the diagram.
inline bool is_self_dual(const AbstractRootSystem& rs, const std::vector<int>& lambda) {
  require_dominant(rs, lambda);
  const int n = static_cast<int>(rs.rank());
  std::vector<int> tau(n);
  for (int i = 0; i < n; ++i) tau[i] = i;
  switch (rs.type.letter) {
    case 'A':
      for (int i = 0; i < n; ++i) tau[i] = n - 1 - i;
      break;
    case 'D':
      if (n % 2) std::swap(tau[n - 2], tau[n - 1]);
      break;
    case 'E':
      if (n == 6) {
        std::swap(tau[0], tau[5]);
        std::swap(tau[2], tau[4]);
      }
      break;
    default:
      break;
  }
  for (int i = 0; i < n; ++i)
    if (lambda[i] != lambda[tau[i]]) return false;
  return true;
}

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Freudenthal multiplicities, keyed by fundamental-weight coordinates.
inline std::map<std::vector<int>, Integer> weight_multiplicities(const AbstractRootSystem& rs,
                                                                 const std::vector<int>& lambda,
                                                                 std::size_t cap = 600) {
  Integer dim = weyl_dimension(rs, lambda);
  if (dim > cap) throw CapExceeded("representation of dimension " + dim.get_str() + " exceeds cap " + std::to_string(cap));
  const std::size_t r = rs.rank();
  std::vector<std::vector<int>> alpha_w;  // simple roots as weights
  for (std::size_t i = 0; i < r; ++i) alpha_w.push_back(rs.cartan[i]);
  std::vector<std::vector<int>> pos_w;
  for (const auto& k : rs.positive_roots) pos_w.push_back(rs.root_as_weight(k));

  // Weight set by string descent, grouped by depth below lambda.
  std::vector<std::vector<std::vector<int>>> levels{{lambda}};
  std::map<std::vector<int>, std::size_t> depth{{lambda, 0}};
  for (std::size_t lv = 0; lv < levels.size(); ++lv)
    for (std::size_t idx = 0; idx < levels[lv].size(); ++idx) {
      const std::vector<int> mu = levels[lv][idx];
      for (std::size_t i = 0; i < r; ++i)
        for (int k = 1; k <= mu[i]; ++k) {
          std::vector<int> nu = mu;
          for (std::size_t j = 0; j < r; ++j) nu[j] -= k * alpha_w[i][j];
          if (depth.count(nu)) continue;
          std::size_t dl = lv + static_cast<std::size_t>(k);
          depth.emplace(nu, dl);
          if (levels.size() <= dl) levels.resize(dl + 1);
          levels[dl].push_back(nu);
        }
    }

  std::vector<int> lr(r);
  for (std::size_t i = 0; i < r; ++i) lr[i] = lambda[i] + 1;
  const Rational top = rs.weight_product(lr, lr);
  std::map<std::vector<int>, Integer> mult{{lambda, Integer(1)}};
  for (std::size_t lv = 1; lv < levels.size(); ++lv)
    for (const auto& mu : levels[lv]) {
      Rational s = 0;
      for (const auto& a : pos_w) {
        std::vector<int> nu = mu;
        for (int k = 1;; ++k) {
          for (std::size_t j = 0; j < r; ++j) nu[j] += a[j];
          auto it = mult.find(nu);
          if (it == mult.end()) {
            if (!depth.count(nu)) break;
            continue;
          }
          s += Rational(it->second) * rs.weight_product(nu, a);
        }
      }
      std::vector<int> mr(r);
      for (std::size_t i = 0; i < r; ++i) mr[i] = mu[i] + 1;
      Rational m = 2 * s / (top - rs.weight_product(mr, mr));
      if (m.get_den() != 1) throw std::logic_error("Freudenthal recursion produced a fraction");
      if (m != 0) mult.emplace(mu, m.get_num());
    }
  return mult;
}

inline bool is_multiplicity_free(const std::map<std::vector<int>, Integer>& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == 1; });
}

/// Roots of the nilradical pair at non-obtuse angles, and exactly one simple root lies there.
inline bool angle_audit(const AbstractRootSystem& rs, const std::vector<int>& lambda) {
  require_dominant(rs, lambda);
  std::vector<const std::vector<int>*> rn;
  for (const auto& k : rs.positive_roots)
    if (rs.pair_root(lambda, k) != 0) rn.push_back(&k);
  for (std::size_t a = 0; a < rn.size(); ++a)
    for (std::size_t b = a + 1; b < rn.size(); ++b)
      if (rs.root_product(*rn[a], *rn[b]) < 0) return false;
  std::size_t simple = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (lambda[i] != 0) ++simple;
  return simple == 1;
}

// ---- enumeration ----

struct Factor {
  SimpleType type;
  std::vector<int> weight;

  std::string label() const {
    std::string w;
    for (std::size_t i = 0; i < weight.size(); ++i) {
      if (!weight[i]) continue;
      if (!w.empty()) w += "+";
      if (weight[i] != 1) w += std::to_string(weight[i]);
      w += "w" + std::to_string(i + 1);
    }
    return type.label() + ":" + (w.empty() ? "0" : w);
  }
};

struct CandidateVerdict {
  std::vector<Factor> factors;
  Integer dim_v = 0;
  std::size_t dim_cone = 0;
  bool self_dual = false;
  std::optional<bool> multiplicity_free;  // nullopt: cap exceeded
  std::optional<bool> angle_ok;
  bool accepted = false;
  std::vector<std::string> reasons;  // failing conditions, primary first

  std::string label() const {
    std::string s;
    for (const auto& f : factors) s += (s.empty() ? "" : " x ") + f.label();
    return s;
  }
};

struct ClassifyOptions {
  int max_rank = 8;
  long max_dim = 100;
  std::size_t cap = 600;
};

/// Types covered by the enumeration up to the given rank.
inline std::vector<SimpleType> simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({'A', r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({'B', r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({'C', r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({'D', r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({'E', r});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

/// Edges of the Weyl chamber up to diagram automorphisms (0-based node indices).
inline std::vector<int> chamber_edges(const SimpleType& t) {
  std::vector<int> out;
  const int n = t.rank;
  for (int i = 0; i < n; ++i) {
    if (t.letter == 'A' && 2 * (i + 1) > n + 1) continue;
    if (t.letter == 'D' && n > 4 && i == n - 2) continue;
    if (t.letter == 'D' && n == 4 && (i == 2 || i == 3)) continue;
    if (t.letter == 'E' && n == 6 && (i == 5 || i == 4)) continue;
    out.push_back(i);
  }
  return out;
}

/// Pairs (V of g) contained in a larger algebra acting on the same variety.
inline std::optional<std::string> non_maximal(const SimpleType& t, const std::vector<int>& w) {
  auto fundamental = [&](int i) {
    for (int j = 0; j < t.rank; ++j)
      if (w[j] != (j == i ? 1 : 0)) return false;
    return true;
  };
  if (t.letter == 'B' && fundamental(t.rank - 1))
    return "not maximal: contained in D" + std::to_string(t.rank + 1) + ":w" + std::to_string(t.rank + 1);
  if (t.letter == 'C' && fundamental(0)) return "not maximal: contained in A" + std::to_string(2 * t.rank - 1) + ":w1";
  if (t.letter == 'G' && fundamental(0)) return "not maximal: contained in B3:w1";
  return std::nullopt;
}

namespace detail {

inline void audit_conditions(CandidateVerdict& v, const AbstractRootSystem* rs, std::size_t cap) {
  const auto& f = v.factors;
  v.self_dual = true;
  bool mf = true, known = true;
  for (const auto& x : f) {
    AbstractRootSystem sys = rs && f.size() == 1 ? *rs : build_root_system(x.type);
    v.self_dual = v.self_dual && is_self_dual(sys, x.weight);
    try {
      mf = mf && is_multiplicity_free(weight_multiplicities(sys, x.weight, cap));
    } catch (const CapExceeded&) {
      known = false;
    }
  }
  if (known) v.multiplicity_free = mf;
  if (!v.self_dual) v.reasons.push_back("(iii) V is not self-dual");
  if (!known) v.reasons.push_back("undecided: weight multiplicity cap exceeded");
  else if (!mf) v.reasons.push_back("(iv) multiple weight");
  for (const auto& x : f)
    if (auto why = non_maximal(x.type, x.weight)) v.reasons.push_back(*why);
}

}  // namespace detail

/// Walks k * omega_i along each chamber edge of each simple type.
inline std::vector<CandidateVerdict> enumerate_simple(const ClassifyOptions& opt) {
  std::vector<CandidateVerdict> out;
  for (const auto& t : simple_types(opt.max_rank)) {
    AbstractRootSystem rs = build_root_system(t);
    for (int i : chamber_edges(t)) {
      std::vector<int> w(t.rank, 0);
      w[i] = 1;
      const std::size_t cone = cone_orbit_dimension(rs, w);
      for (int k = 1;; ++k) {
        w[i] = k;
        Integer dim = weyl_dimension(rs, w);
        if (dim > opt.max_dim) break;
        CandidateVerdict v;
        v.factors = {{t, w}};
        v.dim_v = dim;
        v.dim_cone = cone;
        bool too_big = dim > 2 * cone;
        if (too_big)
          v.reasons.push_back("3a: dim V = " + dim.get_str() + " > 2 * " + std::to_string(cone));
        else if (dim != 2 * cone)
          v.reasons.push_back("(ii) dim V = " + dim.get_str() + " != 2 * " + std::to_string(cone));
        detail::audit_conditions(v, &rs, opt.cap);
        v.angle_ok = angle_audit(rs, w);
        if (v.reasons.empty() && !*v.angle_ok) v.reasons.push_back("angle audit failed");
        v.accepted = v.reasons.empty();
        out.push_back(std::move(v));
        if (too_big) break;
      }
    }
  }
  return out;
}

/// Two-factor tensor products V_a (x) V_b with one factor of dimension 2.
inline std::vector<CandidateVerdict> enumerate_semisimple_pairs(const ClassifyOptions& opt) {
  struct Cand {
    Factor f;
    Integer dim;
    std::size_t cone;
  };
  std::vector<Cand> cands;
  for (const auto& t : simple_types(opt.max_rank - 1)) {
    AbstractRootSystem rs = build_root_system(t);
    for (int i : chamber_edges(t)) {
      std::vector<int> w(t.rank, 0);
      for (int k = 1;; ++k) {
        w[i] = k;
        Integer dim = weyl_dimension(rs, w);
        if (dim > opt.max_dim) break;
        cands.push_back({{t, w}, dim, cone_orbit_dimension(rs, w)});
      }
    }
  }
  std::vector<CandidateVerdict> out;
  for (std::size_t a = 0; a < cands.size(); ++a)
    for (std::size_t b = a; b < cands.size(); ++b) {
      const auto& x = cands[a];
      const auto& y = cands[b];
      if (x.f.type.rank + y.f.type.rank > opt.max_rank) continue;
      Integer dim = x.dim * y.dim;
      if (dim > opt.max_dim) continue;
      CandidateVerdict v;
      v.factors = {x.f, y.f};
      v.dim_v = dim;
      v.dim_cone = x.cone + y.cone - 1;
      if (x.dim != 2 && y.dim != 2) {
        v.reasons.push_back("neither factor has exactly 2 weights");
        out.push_back(std::move(v));
        continue;
      }
      if (dim != 2 * v.dim_cone)
        v.reasons.push_back("(ii) dim V = " + dim.get_str() + " != 2 * " + std::to_string(v.dim_cone));
      detail::audit_conditions(v, nullptr, opt.cap);
      v.accepted = v.reasons.empty();
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace legvar
