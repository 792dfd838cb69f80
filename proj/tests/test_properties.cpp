// Seeded randomized identities. Each suite runs at least 100 cases unless noted.
#include "legvar/classify.hpp"
#include "legvar/groebner.hpp"
#include "legvar/liealg.hpp"
#include "legvar/symplectic.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace legvar;
using namespace legvar::testkit;

TEST(PoissonProperties, Antisymmetry) {
  Gen g(101);
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = 1 + c % 3;
    auto w = g.form(n);
    Polynomial f = g.poly(2 * n, 3), h = g.poly(2 * n, 3);
    EXPECT_EQ(poisson_bracket(f, h, w), -poisson_bracket(h, f, w));
    EXPECT_TRUE(poisson_bracket(f, f, w).is_zero());
  }
}

TEST(PoissonProperties, Leibniz) {
  Gen g(102);
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = 1 + c % 3;
    auto w = g.form(n);
    Polynomial f = g.poly(2 * n, 2), a = g.poly(2 * n, 2), b = g.poly(2 * n, 2);
    EXPECT_EQ(poisson_bracket(f, a * b, w), poisson_bracket(f, a, w) * b + a * poisson_bracket(f, b, w));
  }
}

TEST(PoissonProperties, Jacobi) {
  Gen g(103);
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = 1 + c % 3;
    auto w = g.form(n);
    Polynomial a = g.poly(2 * n, 3, 3), b = g.poly(2 * n, 3, 3), d = g.poly(2 * n, 3, 3);
    Polynomial s = poisson_bracket(a, poisson_bracket(b, d, w), w) + poisson_bracket(b, poisson_bracket(d, a, w), w) +
                   poisson_bracket(d, poisson_bracket(a, b, w), w);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(RhoProperties, LandsInSpAndIntertwines) {
  Gen g(104);
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = 1 + c % 3;
    auto w = g.form(n);
    QuadraticForm a = g.symmetric(2 * n), b = g.symmetric(2 * n);
    QMatrix ra = quadric_to_sp(a, w), rb = quadric_to_sp(b, w);
    EXPECT_TRUE(sp_membership(ra, w));
    QMatrix lhs = quadric_to_sp(quadric_bracket_matrix(a, b, w), w);
    EXPECT_TRUE((lhs - (ra * rb - rb * ra)).is_zero());
  }
}

TEST(EulerProperties, WeightedSumIsDegreeTimesP) {
  Gen g(105);
  for (int c = 0; c < kCases; ++c) {
    std::size_t nv = 1 + c % 5;
    unsigned k = static_cast<unsigned>(c % 5);
    Polynomial p = g.homogeneous(nv, k);
    EXPECT_EQ(euler_weighted_sum(p), p * Rational(static_cast<long>(k)));
  }
}

TEST(FreudenthalProperties, TotalsEqualWeylDimension) {
  // 20 sampled dominant weights over systems of rank <= 4, resampled above the work cap.
  std::mt19937_64 rng(106);
  auto types = simple_types(4);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<int> label(0, 2);
  for (int c = 0; c < 20; ++c) {
    auto t = types[pick(rng)];
    auto rs = build_root_system(t);
    std::vector<int> w(t.rank);
    do {
      for (auto& x : w) x = label(rng);
    } while (weyl_dimension(rs, w) > 20000);
    Integer total = 0;
    for (const auto& [mu, m] : weight_multiplicities(rs, w, 20000)) total += m;
    EXPECT_EQ(total, weyl_dimension(rs, w)) << t.label();
  }
}

TEST(OracleEquivalence, MatrixBracketEqualsDifferentialBracket) {
  Gen g(107);
  for (int c = 0; c < 50; ++c) {
    std::size_t n = 1 + c % 4;
    auto w = g.form(n);
    QuadraticForm a = g.symmetric(2 * n), b = g.symmetric(2 * n);
    Polynomial matrix_formula = quadric_polynomial(quadric_bracket_matrix(a, b, w));
    Polynomial differential = poisson_bracket(quadric_polynomial(a), quadric_polynomial(b), w);
    EXPECT_EQ(matrix_formula, differential);
    // The sparse coordinate bracket used by the Lie algebra layer agrees as well.
    auto qa = detail::quadric_coords(quadric_polynomial(a)), qb = detail::quadric_coords(quadric_polynomial(b));
    auto sparse = quadric_bracket(detail::quadric_gradient(qa, 2 * n), detail::quadric_gradient(qb, 2 * n), w);
    EXPECT_EQ(detail::quadric_from_coords(sparse, 2 * n), differential);
  }
}

TEST(OracleEquivalence, KrullMatchesBruteForceOnMonomialIdeals) {
  std::mt19937_64 rng(108);
  for (int c = 0; c < 20; ++c) {
    std::size_t n = 3 + static_cast<std::size_t>(c) % 8;
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::uniform_int_distribution<int> len(1, 3), count(1, 6), ex(1, 2);
    std::vector<Polynomial> gens;
    std::vector<std::uint32_t> supports;
    for (int k = count(rng); k > 0; --k) {
      std::vector<uint16_t> e(n, 0);
      std::uint32_t s = 0;
      for (int l = len(rng); l > 0; --l) {
        auto v = var(rng);
        e[v] = static_cast<uint16_t>(ex(rng));
        s |= 1u << v;
      }
      gens.push_back(Polynomial::term(Monomial(e), Rational(1)));
      supports.push_back(s);
    }
    auto gb = buchberger(gens, n);
    EXPECT_EQ(krull_dimension(gb), brute_force_dimension(supports, n)) << "case " << c;
  }
}
