// Seeded generators shared by the property tests and the acceptance binary.
#pragma once

#include "legvar/symplectic.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace legvar::testkit {

inline constexpr int kCases = 100;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  Rational coeff() {
    std::uniform_int_distribution<long> n(-5, 5), d(1, 3);
    return make_rational(n(rng), d(rng));
  }

  Polynomial poly(std::size_t nvars, unsigned maxdeg, int terms = 4) {
    std::uniform_int_distribution<unsigned> deg(0, maxdeg);
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
      std::vector<uint16_t> e(nvars, 0);
      for (unsigned k = deg(rng); k > 0; --k) ++e[var(rng)];
      p.add_term(Monomial(e), coeff());
    }
    return p;
  }

  Polynomial homogeneous(std::size_t nvars, unsigned k, int terms = 4) {
    std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
      std::vector<uint16_t> e(nvars, 0);
      for (unsigned j = 0; j < k; ++j) ++e[var(rng)];
      p.add_term(Monomial(e), coeff());
    }
    return p;
  }

  SymplecticForm form(std::size_t n) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) return standard_form(n);
    while (true) {
      QMatrix j(2 * n, 2 * n);
      for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = a + 1; b < 2 * n; ++b) {
          j(a, b) = coeff();
          j(b, a) = -j(a, b);
        }
      if (determinant(j) != 0) return SymplecticForm(j);
    }
  }

  QuadraticForm symmetric(std::size_t d) {
    QMatrix a(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) a(i, j) = a(j, i) = coeff();
    return {a};
  }
};

// Largest independent variable set by exhaustive search over all subsets.
inline std::size_t brute_force_dimension(const std::vector<std::uint32_t>& supports, std::size_t n) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (auto m : supports)
      if ((m & s) == m) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

}  // namespace legvar::testkit
