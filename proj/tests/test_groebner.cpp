#include "legvar/groebner.hpp"

#include <gtest/gtest.h>

using namespace legvar;

namespace {

bool all_spolys_reduce(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j)
      if (!normal_form(s_polynomial(gb.elements[i], gb.elements[j]), gb).is_zero()) return false;
  return true;
}

std::vector<Polynomial> polys(std::initializer_list<const char*> s, std::size_t n) {
  std::vector<Polynomial> out;
  for (auto t : s) out.push_back(parse_poly(t, n));
  return out;
}

}  // namespace

TEST(Groebner, TwistedCubicIdeal) {
  auto gens = polys({"x2^2 - x1*x3", "x0*x2 - x1^2", "x0*x3 - x1*x2"}, 4);
  auto gb = buchberger(gens, 4);
  EXPECT_TRUE(gb.complete);
  EXPECT_TRUE(all_spolys_reduce(gb));
  for (const auto& g : gb.elements) EXPECT_EQ(g.leading_coefficient(), Rational(1));
  EXPECT_EQ(krull_dimension(gb), 2u);
  EXPECT_TRUE(linear_part(gb).empty());
  EXPECT_TRUE(ideal_contains(gb, parse_poly("x0*(x2^2 - x1*x3) + x3^2*(x0*x2 - x1^2)", 4)));
  EXPECT_FALSE(ideal_contains(gb, parse_poly("x0*x1", 4)));
}

TEST(Groebner, BasisIsReducedAndOrderIndependent) {
  auto a = buchberger(polys({"x0^2 - x1", "x0*x1 - x2"}, 3), 3);
  auto b = buchberger(polys({"x0*x1 - x2", "x0^2 - x1", "x0^3 - x0*x1"}, 3), 3);
  ASSERT_EQ(a.elements.size(), b.elements.size());
  for (std::size_t i = 0; i < a.elements.size(); ++i) EXPECT_EQ(a.elements[i], b.elements[i]);
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    for (std::size_t j = 0; j < a.elements.size(); ++j)
      if (i != j) {
        for (const auto& [m, c] : a.elements[i].terms()) EXPECT_FALSE(a.elements[j].leading_monomial().divides(m));
      }
}

TEST(Groebner, UnitIdeal) {
  auto gb = buchberger(polys({"x0*x1 - 1", "x0"}, 2), 2);
  ASSERT_EQ(gb.elements.size(), 1u);
  EXPECT_EQ(gb.elements[0], Polynomial(2, Rational(1)));
  EXPECT_THROW(krull_dimension(gb), std::domain_error);
}

TEST(Groebner, ZeroIdealHasFullDimension) {
  IdealPresentation ideal({Polynomial(3)}, 3);
  auto gb = buchberger(ideal);
  EXPECT_TRUE(gb.elements.empty());
  EXPECT_EQ(krull_dimension(gb), 3u);
}

TEST(Groebner, LinearPartDetectsHyperplane) {
  auto gb = buchberger(polys({"x0*x3 - x1*x2", "x3"}, 4), 4);
  auto lin = linear_part(gb);
  ASSERT_EQ(lin.size(), 1u);
  EXPECT_EQ(lin[0], parse_poly("x3", 4));
}

TEST(Groebner, BudgetExhaustionIsReported) {
  GroebnerOptions opt;
  opt.pair_budget = 1;
  auto gb = buchberger(polys({"x0^2 - x1*x3", "x1^2 - x0*x2", "x2^2 - x1*x3", "x3^2 - x0*x1"}, 4), 4, opt);
  EXPECT_FALSE(gb.complete);
  EXPECT_THROW(krull_dimension(gb), BudgetExceeded);
}

TEST(Groebner, MixedRingsRejected) {
  EXPECT_THROW(IdealPresentation({Polynomial::var(3, 0)}, 4), std::invalid_argument);
}

TEST(Groebner, NormalFormRemainderIsIrreducible) {
  auto gb = buchberger(polys({"x0^2 - x1", "x1^2 - x2"}, 3), 3);
  Polynomial r = normal_form(parse_poly("x0^5 + x1*x2 + x0", 3), gb);
  for (const auto& [m, c] : r.terms())
    for (const auto& g : gb.elements) EXPECT_FALSE(g.leading_monomial().divides(m));
  // x0^5 = x0 x1^2 = x0 x2 modulo the ideal.
  EXPECT_EQ(r, parse_poly("x0*x2 + x1*x2 + x0", 3));
}

TEST(Groebner, KrullOfKnownVarieties) {
  // Segre P1 x P1 in P3: cone dimension 3.
  EXPECT_EQ(krull_dimension(buchberger(polys({"x0*x3 - x1*x2"}, 4), 4)), 3u);
  // Two coordinate planes meeting at a point: x0 x2 = x1 x3 = 0 has cone dimension 2.
  EXPECT_EQ(krull_dimension(buchberger(polys({"x0*x2", "x1*x3"}, 4), 4)), 2u);
  // A point in P2.
  EXPECT_EQ(krull_dimension(buchberger(polys({"x1", "x2"}, 3), 3)), 1u);
}
