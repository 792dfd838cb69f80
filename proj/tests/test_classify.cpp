#include "legvar/classify.hpp"
#include "legvar/dynkin.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace legvar;

namespace {

Integer binom(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<int> fw(int rank, int i, int k = 1) {
  std::vector<int> w(rank, 0);
  w[i - 1] = k;
  return w;
}

std::set<std::string> accepted(const std::vector<CandidateVerdict>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs)
    if (v.accepted) out.insert(v.label());
  return out;
}

const CandidateVerdict* find(const std::vector<CandidateVerdict>& vs, const std::string& label) {
  for (const auto& v : vs)
    if (v.label() == label) return &v;
  return nullptr;
}

}  // namespace

TEST(Dynkin, CartanMatrixConventions) {
  // B2: alpha_2 short, so <alpha_1, alpha_2^vee> = -2.
  EXPECT_EQ(cartan_matrix({'B', 2}), (IntMatrix{{2, -2}, {-1, 2}}));
  EXPECT_EQ(cartan_matrix({'C', 3}), (IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  EXPECT_EQ(cartan_matrix({'G', 2}), (IntMatrix{{2, -1}, {-3, 2}}));
  EXPECT_THROW(cartan_matrix({'D', 3}), std::invalid_argument);
  EXPECT_THROW(parse_type("E9"), std::invalid_argument);
}

TEST(Dynkin, RecognitionSurvivesRelabelling) {
  std::mt19937_64 rng(41);
  for (const auto& t : simple_types(8)) {
    IntMatrix a = cartan_matrix(t);
    const std::size_t n = a.size();
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      IntMatrix b(n, std::vector<int>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[p[i]][p[j]] = a[i][j];
      auto comps = dynkin_components(b);
      ASSERT_EQ(comps.size(), 1u) << t.label();
      EXPECT_EQ(comps[0].type, t) << t.label();
      EXPECT_TRUE(matches_canonical(b, comps[0])) << t.label();
    }
  }
}

TEST(Dynkin, BlockDiagonalSplitsIntoSortedComponents) {
  IntMatrix a(5, std::vector<int>(5, 0));
  auto b2 = cartan_matrix({'B', 2}), a3 = cartan_matrix({'A', 3});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = a3[i][j];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a[3 + i][3 + j] = b2[i][j];
  auto comps = dynkin_components(a);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].type.label(), "A3");
  EXPECT_EQ(comps[1].type.label(), "B2");
}

TEST(RootSystem, PositiveRootCounts) {
  for (const auto& t : simple_types(8)) {
    auto rs = build_root_system(t);
    EXPECT_EQ(static_cast<int>(rs.positive_roots.size()), positive_root_count(t)) << t.label();
  }
}

TEST(Weyl, KnownDimensions) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(weyl_dimension(build_root_system('A', n), fw(n, k)), binom(n + 1, k));
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(weyl_dimension(build_root_system('B', n), fw(n, 1)), 2 * n + 1);
    EXPECT_EQ(weyl_dimension(build_root_system('B', n), fw(n, n)), Integer(1) << n);
  }
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(weyl_dimension(build_root_system('C', n), fw(n, 1)), 2 * n);
    EXPECT_EQ(weyl_dimension(build_root_system('C', n), fw(n, n)), binom(2 * n, n) - binom(2 * n, n - 2));
  }
  for (int n = 4; n <= 7; ++n) {
    EXPECT_EQ(weyl_dimension(build_root_system('D', n), fw(n, 1)), 2 * n);
    EXPECT_EQ(weyl_dimension(build_root_system('D', n), fw(n, n)), Integer(1) << (n - 1));
  }
  EXPECT_EQ(weyl_dimension(build_root_system('E', 6), fw(6, 1)), 27);
  EXPECT_EQ(weyl_dimension(build_root_system('E', 7), fw(7, 7)), 56);
  EXPECT_EQ(weyl_dimension(build_root_system('E', 8), fw(8, 8)), 248);
  EXPECT_EQ(weyl_dimension(build_root_system('F', 4), fw(4, 4)), 26);
  EXPECT_EQ(weyl_dimension(build_root_system('G', 2), fw(2, 1)), 7);
  EXPECT_EQ(weyl_dimension(build_root_system('G', 2), fw(2, 2)), 14);
  EXPECT_EQ(weyl_dimension(build_root_system('A', 1), fw(1, 1, 3)), 4);
}

TEST(Weyl, ConeDimensionsOfSubadjointOrbits) {
  EXPECT_EQ(cone_orbit_dimension(build_root_system('A', 1), fw(1, 1, 3)), 2u);
  EXPECT_EQ(cone_orbit_dimension(build_root_system('C', 3), fw(3, 3)), 7u);
  EXPECT_EQ(cone_orbit_dimension(build_root_system('A', 5), fw(5, 3)), 10u);
  EXPECT_EQ(cone_orbit_dimension(build_root_system('D', 6), fw(6, 6)), 16u);
  EXPECT_EQ(cone_orbit_dimension(build_root_system('E', 7), fw(7, 7)), 28u);
}

TEST(Weyl, NonDominantRejected) {
  auto rs = build_root_system('A', 2);
  EXPECT_THROW(weyl_dimension(rs, {1, -1}), std::invalid_argument);
  EXPECT_THROW(weyl_dimension(rs, {1}), std::invalid_argument);
}

TEST(SelfDual, ByInvolution) {
  EXPECT_TRUE(is_self_dual(build_root_system('A', 5), fw(5, 3)));
  EXPECT_FALSE(is_self_dual(build_root_system('A', 5), fw(5, 2)));
  EXPECT_FALSE(is_self_dual(build_root_system('E', 6), fw(6, 1)));
  EXPECT_TRUE(is_self_dual(build_root_system('E', 6), fw(6, 2)));
  EXPECT_FALSE(is_self_dual(build_root_system('D', 5), fw(5, 5)));
  EXPECT_TRUE(is_self_dual(build_root_system('D', 6), fw(6, 6)));
  EXPECT_TRUE(is_self_dual(build_root_system('C', 4), fw(4, 2)));
}

TEST(Freudenthal, MultiplicitiesOfSmallRepresentations) {
  // Adjoint of sl3: zero weight with multiplicity 2.
  auto m = weight_multiplicities(build_root_system('A', 2), {1, 1});
  EXPECT_EQ(m.at({0, 0}), 2);
  EXPECT_EQ(m.size(), 7u);
  // sp6 adjoint = 2 omega_1: zero weight multiplicity 3.
  auto c = weight_multiplicities(build_root_system('C', 3), fw(3, 1, 2));
  EXPECT_EQ(c.at({0, 0, 0}), 3);
  EXPECT_FALSE(is_multiplicity_free(c));
  EXPECT_TRUE(is_multiplicity_free(weight_multiplicities(build_root_system('C', 3), fw(3, 3))));
  EXPECT_THROW(weight_multiplicities(build_root_system('E', 8), fw(8, 1), 50), CapExceeded);
}

TEST(Freudenthal, TotalsMatchWeyl) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> c(0, 2);
  for (const auto& t : simple_types(4)) {
    auto rs = build_root_system(t);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> w(t.rank);
      do {
        for (auto& x : w) x = c(rng);
      } while (weyl_dimension(rs, w) > 5000);
      Integer total = 0;
      for (const auto& [mu, mult] : weight_multiplicities(rs, w, 5000)) total += mult;
      EXPECT_EQ(total, weyl_dimension(rs, w)) << t.label();
    }
  }
}

TEST(ChamberEdges, ModuloAutomorphisms) {
  EXPECT_EQ(chamber_edges({'A', 5}), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(chamber_edges({'A', 4}), (std::vector<int>{0, 1}));
  EXPECT_EQ(chamber_edges({'D', 4}), (std::vector<int>{0, 1}));
  EXPECT_EQ(chamber_edges({'D', 6}), (std::vector<int>{0, 1, 2, 3, 5}));
  EXPECT_EQ(chamber_edges({'E', 6}), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(chamber_edges({'E', 7}).size(), 7u);
}

TEST(Maximality, KnownInclusions) {
  EXPECT_TRUE(non_maximal({'B', 3}, fw(3, 3)).has_value());
  EXPECT_TRUE(non_maximal({'C', 4}, fw(4, 1)).has_value());
  EXPECT_TRUE(non_maximal({'G', 2}, fw(2, 1)).has_value());
  EXPECT_FALSE(non_maximal({'C', 3}, fw(3, 3)).has_value());
  EXPECT_FALSE(non_maximal({'D', 6}, fw(6, 6)).has_value());
}

TEST(Angles, SubadjointWeightsPass) {
  EXPECT_TRUE(angle_audit(build_root_system('E', 7), fw(7, 7)));
  EXPECT_TRUE(angle_audit(build_root_system('C', 3), fw(3, 3)));
  EXPECT_FALSE(angle_audit(build_root_system('A', 2), {1, 1}));
}

class Enumeration : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    simple = new std::vector<CandidateVerdict>(enumerate_simple({}));
    pairs = new std::vector<CandidateVerdict>(enumerate_semisimple_pairs({}));
  }
  static void TearDownTestSuite() {
    delete simple;
    delete pairs;
  }
  static std::vector<CandidateVerdict>* simple;
  static std::vector<CandidateVerdict>* pairs;
};
std::vector<CandidateVerdict>* Enumeration::simple = nullptr;
std::vector<CandidateVerdict>* Enumeration::pairs = nullptr;

TEST_F(Enumeration, SimpleAcceptedSet) {
  EXPECT_EQ(accepted(*simple), (std::set<std::string>{"A1:3w1", "C3:w3", "A5:w3", "D6:w6", "E7:w7"}));
  std::map<std::string, long> dims{{"A1:3w1", 4}, {"C3:w3", 14}, {"A5:w3", 20}, {"D6:w6", 32}, {"E7:w7", 56}};
  for (const auto& v : *simple)
    if (v.accepted) {
      EXPECT_EQ(v.dim_v, dims.at(v.label()));
      EXPECT_EQ(v.dim_v, 2 * v.dim_cone);
      EXPECT_TRUE(v.self_dual);
      EXPECT_EQ(v.multiplicity_free, true);
    }
}

TEST_F(Enumeration, RejectionReasonsQuoteCondition) {
  auto a3 = find(*simple, "A3:w2");
  ASSERT_NE(a3, nullptr);
  EXPECT_FALSE(a3->accepted);
  EXPECT_EQ(a3->dim_v, 6);
  EXPECT_EQ(a3->reasons.front().rfind("(ii)", 0), 0u);
  auto c3 = find(*simple, "C3:2w1");
  ASSERT_NE(c3, nullptr);
  EXPECT_FALSE(c3->accepted);
  EXPECT_EQ(c3->multiplicity_free, false);
  EXPECT_NE(std::find(c3->reasons.begin(), c3->reasons.end(), "(iv) multiple weight"), c3->reasons.end());
  auto b5 = find(*simple, "B5:w5");
  ASSERT_NE(b5, nullptr);
  EXPECT_FALSE(b5->accepted);
  EXPECT_EQ(b5->dim_v, 2 * b5->dim_cone);
}

TEST_F(Enumeration, EveryG2CandidateRejected) {
  std::size_t seen = 0;
  for (const auto* list : {simple, pairs})
    for (const auto& v : *list)
      for (const auto& f : v.factors)
        if (f.type.letter == 'G') {
          ++seen;
          EXPECT_FALSE(v.accepted) << v.label();
        }
  EXPECT_GT(seen, 2u);
  auto g2 = find(*pairs, "A1:w1 x G2:w1");
  ASSERT_NE(g2, nullptr);
  EXPECT_EQ(g2->dim_v, 2 * g2->dim_cone);
  EXPECT_EQ(g2->reasons.back().rfind("not maximal", 0), 0u);
}

TEST_F(Enumeration, PairsAreLineTimesQuadric) {
  std::set<std::string> expect{"A1:w1 x A1:2w1", "A1:w1 x B2:w1", "A1:w1 x A3:w2"};
  for (int m = 3; m <= 7; ++m) expect.insert("A1:w1 x B" + std::to_string(m) + ":w1");
  for (int m = 4; m <= 7; ++m) expect.insert("A1:w1 x D" + std::to_string(m) + ":w1");
  EXPECT_EQ(accepted(*pairs), expect);
  // Each accepted pair is sl2 (x) so_m acting on C^2 (x) C^m.
  for (const auto& v : *pairs)
    if (v.accepted) {
      EXPECT_EQ(v.factors[0].label(), "A1:w1");
      EXPECT_EQ(v.dim_v, 2 * v.dim_cone);
    }
  auto b3 = find(*pairs, "A1:w1 x B3:w3");
  ASSERT_NE(b3, nullptr);
  EXPECT_FALSE(b3->accepted);
}
