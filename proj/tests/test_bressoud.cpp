#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qverify/bressoud.hpp"
#include "qverify/qcomb.hpp"
#include "qverify/theta.hpp"

using namespace qverify;  // NOLINT

namespace {

Poly P(const char* text) { return parsePoly(text); }

/// G by brute force over a generous j window using quotient-built binomials.
Poly gOracle(const GParams& p) {
  Poly sum;
  const int64_t span = p.N + p.M + 1;
  for (int64_t j = -span; j <= span; ++j) {
    const int64_t bottom = p.N - p.K * j;
    const int64_t rest = p.M + p.K * j;
    if (bottom < 0 || rest < 0) continue;
    const int64_t twice = j * ((p.alphaK + p.betaK) * j + p.alphaK - p.betaK);
    if (twice % 2 != 0) throw std::logic_error("non-integral exponent in oracle");
    const Poly b = oracle::toPoly(oracle::binomByQuotient(static_cast<int>(bottom), static_cast<int>(rest)));
    sum.addShifted(b, twice / 2, j % 2 == 0 ? 1 : -1);
  }
  return sum;
}

bool contains(const std::vector<std::string>& list, const std::string& needle) {
  return std::find(list.begin(), list.end(), needle) != list.end();
}

const std::vector<GParams (*)(int64_t)> kProvenFamilies = {
    [](int64_t L) { return GParams{L, L + 1, 8, 4, 3}; },
    [](int64_t L) { return GParams{L, L + 1, 4, 2, 3}; },
    [](int64_t L) { return GParams{L, L + 1, 13, 8, 4}; },
    [](int64_t L) { return GParams{L, L, 11, 10, 4}; },
    [](int64_t L) { return GParams{L - 1, L + 1, 16, 5, 4}; },
    [](int64_t L) { return GParams{L - 1, L + 1, 15, 6, 4}; },
    [](int64_t L) { return GParams{L - 1, L + 1, 30, 15, 6}; },
};

}  // namespace

TEST(Bressoud, GExamples) {
  EXPECT_EQ(gPoly({0, 0, 5, 4, 3}), Poly(1));
  EXPECT_EQ(gPoly({0, 0, 8, 1, 3}), Poly(1));
  EXPECT_EQ(gPoly({1, 1, 5, 4, 3}), P("1 + q"));
  EXPECT_EQ(gPoly({0, 2, 7, 2, 3}), Poly(1));
}

TEST(Bressoud, GMatchesBruteForce) {
  for (int64_t K = 2; K <= 4; ++K)
    for (int64_t N = 0; N <= 6; ++N)
      for (int64_t M = 0; M <= 6; ++M)
        for (int64_t a = 0; a <= 2 * K; ++a)
          for (int64_t b = 0; b <= 2 * K; ++b) {
            const GParams p{N, M, a, b, K};
            if ((a + b) % 2 != 0 && K % 2 != 0) continue;
            if ((a - b) % 2 != 0) continue;
            EXPECT_EQ(gPoly(p), gOracle(p)) << toString(p);
          }
}

TEST(Bressoud, RegionExamples) {
  for (int64_t n = 0; n <= 5; ++n) EXPECT_TRUE(regionCheck({n, n, 5, 4, 3}).inRegion);
  const auto zeroSum = regionCheck({1, 1, 0, 0, 3});
  EXPECT_FALSE(zeroSum.inRegion);
  EXPECT_TRUE(contains(zeroSum.violated, "1 <= alpha+beta"));
  // N-M = K-alpha exactly: excluded at K = 2, admitted at K = 3.
  EXPECT_FALSE(regionCheck({1, 0, 2, 1, 2}).inRegion);
  EXPECT_TRUE(regionCheck({2, 0, 3, 3, 3}).inRegion);
  EXPECT_TRUE(regionCheck({1, 1, 3, 2, 3}).violated.empty());
}

TEST(Bressoud, BorweinSmallCases) {
  const BorweinTriple zero = borweinABC(0);
  EXPECT_EQ(zero.A, Poly(1));
  EXPECT_TRUE(borweinDecomposition(0));
  const BorweinTriple one = borweinABC(1);
  EXPECT_EQ(one.A, P("1 + q"));
  EXPECT_EQ(one.B, Poly(1));
  EXPECT_EQ(one.C, Poly(1));
  EXPECT_EQ(borweinProduct(1), P("1 - q - q^2 + q^3"));
  EXPECT_TRUE(borweinDecomposition(1));
  EXPECT_TRUE(borweinDecomposition(10));
}

TEST(Bressoud, BorweinNonnegativeAndDecomposes) {
  for (int64_t n = 0; n <= 20; ++n) {
    const BorweinTriple t = borweinABC(n);
    EXPECT_TRUE(isNonnegative(t.A).nonnegative) << n;
    EXPECT_TRUE(isNonnegative(t.B).nonnegative) << n;
    EXPECT_TRUE(isNonnegative(t.C).nonnegative) << n;
    EXPECT_EQ(borweinCombination(t), borweinProduct(n)) << n;
  }
}

TEST(Bressoud, TheoremOneInstancesNonnegative) {
  for (int64_t nu = 1; nu <= 3; ++nu)
    for (int64_t s = 0; s < nu; ++s)
      for (int64_t L = 0; L <= 14; ++L) {
        const GParams p = theorem1Params(nu, s, L);
        const Poly g = gPoly(p);
        EXPECT_GE(g.minExp(), 0);
        EXPECT_TRUE(isNonnegative(g).nonnegative) << toString(p);
      }
}

TEST(Bressoud, ProvenFamiliesNonnegative) {
  for (auto family : kProvenFamilies) {
    for (int64_t L = 1; L <= 20; ++L) {
      const GParams p = family(L);
      const Poly g = gPoly(p);
      EXPECT_GE(g.minExp(), 0) << toString(p);
      EXPECT_TRUE(isNonnegative(g).nonnegative) << toString(p);
      if (L <= 6) EXPECT_EQ(g, gOracle(p)) << toString(p);
    }
  }
}

TEST(Bressoud, ThetaSumRejectsBadExponents) {
  // e(j) = j^2 / 2 over [2; 1 - j]
  const auto half = ThetaSumSpec::linear({0, 2}, {1, 0, 0, 2}, {0, 1}, 1);
  try {
    thetaSum(half, 0);
    FAIL() << "expected NonIntegerExponent";
  } catch (const NonIntegerExponent& e) {
    EXPECT_NE(e.j() % 2, 0);
  }
  const auto negative = ThetaSumSpec::linear({0, 2}, {0, -1, 0, 1}, {0, 1}, 1);
  EXPECT_THROW(thetaSum(negative, 0), NegativeExponent);
}
