#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qverify/qcomb.hpp"
#include "qverify/transforms.hpp"

using namespace qverify;  // NOLINT

namespace {

Poly P(const char* text) { return parsePoly(text); }

Poly binomOracle(int64_t top, int64_t bottom) {
  if (bottom < 0 || bottom > top) return Poly();
  return oracle::toPoly(oracle::binomByQuotient(static_cast<int>(bottom), static_cast<int>(top - bottom)));
}

/// Kernel entries summed directly from their defining formulas.
Poly kernelOracle(KernelKind kind, int64_t L, int64_t k) {
  Poly sum;
  for (int64_t m = 0; m <= L; ++m) {
    switch (kind) {
      case KernelKind::C:
        sum.addShifted(binomOracle(L, m) * binomOracle(L - m, k), triangular(m) + triangular(m + k));
        break;
      case KernelKind::W:
        sum.addShifted(binomOracle(L, m) * binomOracle(L - m, 2 * k), (m + k) * (m + k) + k * k);
        break;
      case KernelKind::O:
        sum.addShifted(binomOracle(L, m) * binomOracle(L - m, 2 * k + 1), 2 * triangular(m + k) + 2 * triangular(k));
        break;
    }
  }
  return sum;
}

constexpr KernelKind kKinds[] = {KernelKind::C, KernelKind::W, KernelKind::O};

}  // namespace

TEST(Transforms, KernelExamples) {
  EXPECT_EQ(kernel(KernelKind::C, 0, 0), Poly(1));
  EXPECT_EQ(kernel(KernelKind::C, 1, 1), P("q"));
  EXPECT_EQ(kernel(KernelKind::C, 1, 0), P("1 + q^2"));
  EXPECT_EQ(kernel(KernelKind::W, 0, 0), Poly(1));
  EXPECT_EQ(kernel(KernelKind::W, 1, 0), P("1 + q"));
  EXPECT_EQ(kernel(KernelKind::O, 0, 0), Poly());
  EXPECT_EQ(kernel(KernelKind::O, 1, 0), Poly(1));
  EXPECT_EQ(kernel(KernelKind::C, 3, 7), Poly());
  EXPECT_EQ(kernel(KernelKind::C, 3, -1), Poly());
}

TEST(Transforms, KindNames) {
  for (KernelKind kind : kKinds) EXPECT_EQ(parseKernelKind(toString(kind)), kind);
  EXPECT_THROW(parseKernelKind("X"), std::invalid_argument);
}

TEST(Transforms, KernelsMatchDirectSums) {
  for (KernelKind kind : kKinds)
    for (int64_t L = 0; L <= 8; ++L)
      for (int64_t k = 0; k <= L + 1; ++k) EXPECT_EQ(kernel(kind, L, k), kernelOracle(kind, L, k));
}

TEST(Transforms, KernelsNonnegativeWithStatedSupport) {
  for (KernelKind kind : kKinds) {
    for (int64_t L = 0; L <= 20; ++L) {
      const auto row = kernelRow(kind, L);
      EXPECT_EQ(static_cast<int64_t>(row->entries.size()), kernelMaxK(kind, L) + 1);
      for (const Poly& entry : row->entries) EXPECT_TRUE(isNonnegative(entry).nonnegative);
      EXPECT_TRUE(kernel(kind, L, kernelMaxK(kind, L) + 1).isZero());
    }
  }
}

TEST(Transforms, KernelRowSumIdentity) {
  for (int64_t L = 0; L <= 20; ++L) {
    Poly rhs;
    for (int64_t k = 0; k <= L; ++k) rhs += monomialShift(qBinomTopBottom(L, k) * pochhammer(-1, 1, 1, k), triangular(k));
    EXPECT_EQ(applyTransform(KernelKind::C, L, [](int64_t) { return Poly(1); }), rhs) << L;
  }
}

TEST(Transforms, ApplyTransformExamples) {
  EXPECT_EQ(applyTransform(KernelKind::C, 5, [](int64_t) { return Poly(); }), Poly());
  EXPECT_EQ(applyTransform(KernelKind::C, 1, [](int64_t) { return Poly(1); }), P("1 + q + q^2"));
  for (int64_t L = 0; L <= 10; ++L) {
    for (int64_t a = -5; a <= 5; ++a) {
      const Poly lhs = applyTransform(KernelKind::C, L, [a](int64_t k) { return floorBinom(k, k - a); });
      EXPECT_EQ(lhs, monomialShift(qBinomTopBottom(2 * L + 1, L - a), triangular(a)));
    }
  }
}

TEST(Transforms, ApplyTransformIsLinear) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> f, g;
    for (int k = 0; k <= 8; ++k) {
      f.push_back(oracle::randomPoly(rng, 4, 0, 3));
      g.push_back(oracle::randomPoly(rng, 4, 0, 3));
    }
    for (KernelKind kind : kKinds) {
      const int64_t L = trial % 9;
      const Poly sum = applyTransform(kind, L, [&](int64_t k) { return f[k] + g[k]; });
      EXPECT_EQ(sum, applyTransform(kind, L, [&](int64_t k) { return f[k]; }) +
                         applyTransform(kind, L, [&](int64_t k) { return g[k]; }));
    }
  }
}

TEST(Transforms, KernelIdentities) {
  EXPECT_TRUE(verifyKernelIdentity(KernelKind::C, 0, 0));
  for (KernelKind kind : kKinds)
    for (int64_t L = 0; L <= 12; ++L)
      for (int64_t a = -6; a <= 6; ++a) {
        const auto sides = kernelIdentitySides(kind, L, a);
        EXPECT_EQ(sides.lhs, sides.rhs) << toString(kind) << " L=" << L << " a=" << a;
      }
}

TEST(Transforms, BerkovichUncu) {
  const auto base = berkovichUncuSides(0, 0);
  EXPECT_EQ(base.lhs, Poly(1));
  EXPECT_EQ(base.rhs, Poly(1));
  // L = 1, a = 0: k=0 gives T(0,0)+T(0,1) = 1; k=1 gives q*(q + 1)
  EXPECT_EQ(berkovichUncuSides(1, 0).lhs, P("1 + q + q^2"));
  for (int64_t L = 0; L <= 12; ++L)
    for (int64_t a = -6; a <= 6; ++a) EXPECT_TRUE(verifyBerkovichUncu(L, a)) << L << "," << a;
}

TEST(Transforms, ChainOnSchurIdentity) {
  // F(L) = sum_j (-1)^j q^{(3j+1)j/2} [L; floor((L-3j)/2)] = 1
  for (int64_t L = 0; L <= 12; ++L) {
    auto F = [](int64_t k) {
      Poly sum;
      for (int64_t j = -k; j <= k; ++j) sum.addShifted(floorBinom(k, k - 3 * j), (3 * j + 1) * j / 2, j % 2 == 0 ? 1 : -1);
      return sum;
    };
    const Poly transformThenSum = applyTransform(KernelKind::C, L, F);
    Poly sumThenTransform;
    for (int64_t j = -L - 1; j <= L + 1; ++j) {
      const Poly inner = applyTransform(KernelKind::C, L, [j](int64_t k) { return floorBinom(k, k - 3 * j); });
      sumThenTransform.addShifted(inner, (3 * j + 1) * j / 2, j % 2 == 0 ? 1 : -1);
    }
    Poly closed;
    for (int64_t j = -L - 1; j <= L + 1; ++j)
      closed.addShifted(qBinomTopBottom(2 * L + 1, L - 3 * j), (3 * j + 1) * j / 2 + triangular(3 * j), j % 2 == 0 ? 1 : -1);
    EXPECT_EQ(transformThenSum, sumThenTransform);
    EXPECT_EQ(transformThenSum, closed);
  }
}
