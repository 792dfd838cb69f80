// Buchberger's algorithm under grevlex, normal forms, Krull dimension and
// linear-part extraction.
#pragma once

#include "legvar/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legvar {

struct IdealPresentation {
  std::vector<Polynomial> generators;
  std::size_t nvars = 0;

  IdealPresentation() = default;
  IdealPresentation(std::vector<Polynomial> gens, std::size_t n) : nvars(n) {
    for (auto& g : gens) {
      if (g.nvars() != n) throw std::invalid_argument("ideal generator has wrong number of variables");
      if (!g.is_zero()) generators.push_back(std::move(g));
    }
  }
};

struct GroebnerOptions {
  std::size_t pair_budget = 200000;
};

/// Reduced monic basis (when complete) sorted by increasing leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  std::size_t nvars = 0;
  bool complete = true;          // false: pair budget exhausted, basis partial
  std::size_t pairs_processed = 0;
  std::string order = "grevlex";
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Remainder of p on division by the basis; every term is reduced.
inline Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& basis) {
  Polynomial r(p.nvars());
  while (!p.is_zero()) {
    Monomial lm = p.leading_monomial();
    Rational lc = p.leading_coefficient();
    const Polynomial* div = nullptr;
    for (const auto& g : basis)
      if (g.leading_monomial().divides(lm)) {
        div = &g;
        break;
      }
    if (div) {
      p.add_scaled(-lc / div->leading_coefficient(), lm / div->leading_monomial(), *div);
    } else {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars) throw std::invalid_argument("normal_form: dimension mismatch");
  return normal_form(p, gb.elements);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s(f.nvars());
  s.add_scaled(1 / f.leading_coefficient(), l / f.leading_monomial(), f);
  s.add_scaled(-1 / g.leading_coefficient(), l / g.leading_monomial(), g);
  return s;
}

namespace detail {

inline std::vector<Polynomial> interreduce(std::vector<Polynomial> g) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = g[j].leading_monomial();
      const auto& b = g[i].leading_monomial();
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial lead = Polynomial::term(minimal[i].leading_monomial(), minimal[i].leading_coefficient());
    Polynomial tail = minimal[i] - lead;
    reduced.push_back((lead + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

}  // namespace detail

/// Buchberger with the normal selection strategy and the coprime and chain criteria.
/// When the pair budget runs out the partial basis is returned with complete = false.
inline GroebnerBasis buchberger(const IdealPresentation& ideal, const GroebnerOptions& opt = {}) {
  GroebnerBasis out;
  out.nvars = ideal.nvars;
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators) {
    Polynomial r = normal_form(p, g);
    if (!r.is_zero()) g.push_back(r.monic());
  }
  if (g.empty()) return out;

  using Pair = std::pair<std::size_t, std::size_t>;
  auto key = [&](const Pair& p) {
    return Monomial::lcm(g[p.first].leading_monomial(), g[p.second].leading_monomial()).degree();
  };
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> queue;
  std::set<Pair> pending;
  auto push = [&](std::size_t i, std::size_t j) {
    queue.emplace(key({i, j}), i, j);
    pending.emplace(i, j);
  };
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Monomial& li = g[i].leading_monomial();
    const Monomial& lj = g[j].leading_monomial();
    if (li.coprime(lj)) continue;
    Monomial l = Monomial::lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (g[k].leading_monomial().divides(l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    if (out.pairs_processed >= opt.pair_budget) {
      out.complete = false;
      out.elements = g;
      return out;
    }
    ++out.pairs_processed;
    Polynomial r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    std::size_t m = g.size() - 1;
    for (std::size_t k = 0; k < m; ++k) push(k, m);
  }
  out.elements = detail::interreduce(std::move(g));
  return out;
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::size_t nvars,
                                const GroebnerOptions& opt = {}) {
  return buchberger(IdealPresentation(gens, nvars), opt);
}

inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

/// Dimension of k[x]/I: the size of a largest variable set containing the
/// support of no leading monomial.
inline std::size_t krull_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.nvars;
  if (n > 64) throw std::invalid_argument("krull_dimension: more than 64 variables");
  if (!gb.complete) throw BudgetExceeded("krull_dimension: basis incomplete");
  std::vector<std::uint64_t> masks;
  for (const auto& g : gb.elements) {
    std::uint64_t m = 0;
    const auto& lm = g.leading_monomial();
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i]) m |= std::uint64_t{1} << i;
    if (m == 0) throw std::domain_error("krull_dimension: ideal contains 1");
    masks.push_back(m);
  }
  std::size_t best = 0;
  auto ok = [&](std::uint64_t s) {
    for (auto m : masks)
      if ((m & ~s) == 0) return false;
    return true;
  };
  // Depth-first over variables with include-first ordering and a size bound.
  auto dfs = [&](auto&& self, std::size_t v, std::uint64_t s, std::size_t size) -> void {
    if (size + (n - v) <= best) return;
    if (v == n) {
      best = size;
      return;
    }
    std::uint64_t with = s | (std::uint64_t{1} << v);
    if (ok(with)) self(self, v + 1, with, size + 1);
    self(self, v + 1, s, size);
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

/// Degree-one elements of the reduced basis.
inline std::vector<Polynomial> linear_part(const GroebnerBasis& gb) {
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements)
    if (g.degree() == 1) out.push_back(g);
  return out;
}

}  // namespace legvar
