#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "qverify/bressoud.hpp"
#include "qverify/identities.hpp"
#include "qverify/qcomb.hpp"
#include "qverify/transforms.hpp"

using namespace qverify;  // NOLINT

namespace {

Poly P(const char* text) { return parsePoly(text); }

/// Foda-Quano multi-sum by plain nested loops over n_2..n_nu in [0, L].
Poly fodaQuanoOracle(int64_t nu, int64_t s, int64_t L) {
  const int64_t dims = nu - 1;
  std::vector<int64_t> n(static_cast<std::size_t>(dims), 0);
  Poly sum;
  std::function<void(int64_t)> recurse = [&](int64_t depth) {
    if (depth < dims) {
      for (int64_t v = 0; v <= L; ++v) {
        n[static_cast<std::size_t>(depth)] = v;
        recurse(depth + 1);
      }
      return;
    }
    // N[i] for i = 2..nu stored at index i-2
    std::vector<int64_t> N(static_cast<std::size_t>(dims), 0);
    for (int64_t i = dims - 1, acc = 0; i >= 0; --i) {
      acc += n[static_cast<std::size_t>(i)];
      N[static_cast<std::size_t>(i)] = acc;
    }
    int64_t exponent = 0;
    for (int64_t i = 0; i < dims; ++i) exponent += N[static_cast<std::size_t>(i)] * N[static_cast<std::size_t>(i)];
    for (int64_t idx = nu + 1 - s; idx <= nu; ++idx) exponent += N[static_cast<std::size_t>(idx - 2)];
    Poly term(1);
    int64_t partial = 0;
    for (int64_t i = 2; i <= nu; ++i) {
      partial += N[static_cast<std::size_t>(i - 2)];
      const int64_t ni = n[static_cast<std::size_t>(i - 2)];
      const int64_t E = std::max<int64_t>(i + s - nu, 0);
      term = term * qBinomTopBottom(ni + L - 2 * partial - E, ni);
      if (term.isZero()) return;
    }
    sum += monomialShift(term, exponent);
  };
  recurse(0);
  return sum;
}

bool hasKey(const nlohmann::ordered_json& j, const char* key) { return j.contains(key); }

}  // namespace

TEST(Identities, ThetaExamples) {
  for (int64_t L = 0; L <= 40; ++L) EXPECT_EQ(thetaSum(thetaSpecFor("eq2.13"), L), Poly(1)) << L;
  EXPECT_EQ(thetaSum(thetaSpecFor("eq3.1"), 1), Poly());
  EXPECT_EQ(thetaSum(thetaSpecFor("eq3.1"), 0), Poly(1));
  for (int64_t L = 0; L <= 20; ++L) EXPECT_EQ(thetaSum(thetaSpecFor("eq3.7"), L), Poly()) << L;
  EXPECT_THROW(thetaSpecFor("eq2.1"), UnknownIdentity);
}

TEST(Identities, FodaQuanoExamples) {
  for (int64_t L = 0; L <= 5; ++L) EXPECT_EQ(fodaQuanoLhs({1, 0, L}), Poly(1));
  EXPECT_EQ(fodaQuanoLhs({2, 0, 0}), Poly(1));
  for (int64_t L = 0; L <= 20; ++L) EXPECT_EQ(fodaQuanoLhs({2, 0, L}), fodaQuanoRhs({2, 0, L})) << L;
}

TEST(Identities, FodaQuanoMatchesNestedLoops) {
  for (int64_t nu = 1; nu <= 3; ++nu)
    for (int64_t s = 0; s < nu; ++s)
      for (int64_t L = 0; L <= 9; ++L) EXPECT_EQ(fodaQuanoLhs({nu, s, L}), fodaQuanoOracle(nu, s, L));
}

TEST(Identities, FodaQuanoIdentity) {
  for (int64_t nu = 1; nu <= 4; ++nu)
    for (int64_t s = 0; s < nu; ++s)
      for (int64_t L = 0; L <= 20; ++L) EXPECT_EQ(fodaQuanoLhs({nu, s, L}), fodaQuanoRhs({nu, s, L}));
}

TEST(Identities, TheoremOneConstruction) {
  for (int64_t L = 0; L <= 8; ++L) {
    Poly rowSum;
    for (int64_t k = 0; k <= L; ++k) rowSum += kernel(KernelKind::C, L, k);
    EXPECT_EQ(theorem1Lhs({1, 0, L}), rowSum);
  }
  EXPECT_EQ(theorem1Lhs({2, 0, 0}), Poly(1));
  for (int64_t nu = 1; nu <= 3; ++nu) {
    for (int64_t s = 0; s < nu; ++s) {
      for (int64_t L = 0; L <= 10; ++L) {
        const Poly lhs = theorem1Lhs({nu, s, L});
        EXPECT_EQ(lhs, theorem1Rhs({nu, s, L}));
        EXPECT_TRUE(isNonnegative(lhs).nonnegative);
        const auto report = verify("eq2.22", {{"nu", nu}, {"s", s}, {"L", L}});
        EXPECT_TRUE(report.passed) << nu << "," << s << "," << L;
      }
    }
  }
}

TEST(Identities, VerifyExamples) {
  const auto lebesgue = verify("eq2.16", {{"L", 1}});
  EXPECT_TRUE(lebesgue.passed);
  EXPECT_EQ(lebesgue.lhs, "1 + q + q^2");
  EXPECT_EQ(lebesgue.rhs, "1 + q + q^2");
  const auto euler = verify("eq2.19", {{"L", 1}});
  EXPECT_TRUE(euler.passed);
  EXPECT_EQ(euler.lhs, "1 + q + q^2");
  for (int64_t L = 0; L <= 20; ++L) {
    const auto dyson = verify("eq3.24", {{"L", L}});
    EXPECT_TRUE(dyson.passed) << L;
    Poly product(1);
    for (int64_t j = 1; j <= L; ++j) product = product * (Poly(1) + Poly::monomial(1, j) + Poly::monomial(1, 2 * j));
    EXPECT_EQ(thetaSum(thetaSpecFor("eq3.24"), L), product);
  }
}

TEST(Identities, RegistryContents) {
  const char* required[] = {"eq1.6",  "eq2.1",  "eq2.6a",  "eq2.6d",  "eq2.6f",  "eq2.13",  "eq2.14",
                            "eq2.15", "eq2.16", "eq2.19",  "eq2.21",  "eq2.22",  "eq3.1",   "eq3.2",
                            "eq3.3",  "eq3.4",  "eq3.5",   "eq3.7",   "eq3.8",   "eq3.9",   "eq3.10",
                            "eq3.16x", "eq3.17y", "eq3.18z", "eq3.19w", "eq3.24", "eq3.25"};
  for (const char* id : required) EXPECT_TRUE(isRegistered(id)) << id;
  const auto& list = registryList();
  EXPECT_TRUE(std::is_sorted(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  EXPECT_NE(registryLookup("eq3.4").description.find("Bressoud's bounded version of the first Rogers-Ramanujan"),
            std::string::npos);
  EXPECT_NE(registryLookup("eq3.5").description.find("Warnaar's bounded version of the second"), std::string::npos);
  EXPECT_EQ(registryLookup("eq3.4").anchor, "(3.4)");
  EXPECT_THROW(registryLookup("bogus"), UnknownIdentity);
  EXPECT_THROW(verify("bogus", {}), UnknownIdentity);
}

TEST(Identities, ParameterErrors) {
  EXPECT_THROW(verify("eq2.16", {}), MissingParam);
  EXPECT_THROW(verify("eq2.21", {{"nu", 2}, {"L", 3}}), MissingParam);
  EXPECT_THROW(verify("eq2.21", {{"nu", 2}, {"s", 2}, {"L", 3}}), std::invalid_argument);
}

TEST(Identities, ConstantIdentitiesToForty) {
  for (const char* id : {"eq2.13", "eq3.1", "eq3.2", "eq3.3", "eq3.7", "eq3.17y"})
    for (int64_t L = 0; L <= 40; ++L) EXPECT_TRUE(verify(id, {{"L", L}}).passed) << id << " L=" << L;
}

TEST(Identities, BoundedRogersRamanujanChain) {
  for (int64_t L = 0; L <= 30; ++L) {
    Poly first, second;
    for (int64_t n = 0; n <= L; ++n) {
      first += monomialShift(qBinomTopBottom(L, n), n * n);
      second += monomialShift(qBinomTopBottom(L, n), n * n + n);
    }
    EXPECT_EQ(thetaSum(thetaSpecFor("eq3.4"), L), first);
    EXPECT_EQ(thetaSum(thetaSpecFor("eq3.5"), L), second);
    for (const char* id : {"eq3.4", "eq3.5", "eq3.8", "eq3.16x", "eq3.18z"})
      EXPECT_TRUE(verify(id, {{"L", L}}).passed) << id << " L=" << L;
  }
  for (int64_t k = 0; k <= 40; ++k) {
    EXPECT_TRUE(verify("eq3.9", {{"k", k}}).passed) << k;
    EXPECT_TRUE(verify("eq3.19w", {{"k", k}}).passed) << k;
  }
}

TEST(Identities, TransformedPositivityResults) {
  for (int64_t L = 0; L <= 12; ++L) {
    const auto mod21 = verify("eq3.10", {{"L", L}});
    EXPECT_TRUE(mod21.passed) << L;
    EXPECT_FALSE(mod21.negativeWitness);
    EXPECT_TRUE(verify("eq3.25", {{"L", L}}).passed) << L;
  }
}

TEST(Identities, ModTwentyChainProductSide) {
  // (3.16x): the theta sum equals (-q;q^2)_L
  for (int64_t L = 0; L <= 12; ++L)
    EXPECT_EQ(thetaSum(thetaSpecFor("eq3.16x"), L), pochhammer(-1, 1, 2, L));
  EXPECT_EQ(pochhammer(-1, 1, 2, 1), P("1 + q"));
}

TEST(Identities, ReportJsonShape) {
  const auto j = toJson(verify("eq2.13", {{"L", 3}}));
  const std::vector<std::string> keys = {"identityId", "params",          "passed",          "lhs",
                                         "rhs",        "firstMismatchExp", "negativeWitness", "elapsedMillis"};
  std::vector<std::string> seen;
  for (auto it = j.begin(); it != j.end(); ++it) seen.push_back(it.key());
  EXPECT_EQ(seen, keys);
  EXPECT_TRUE(hasKey(j, "params"));
  EXPECT_EQ(j["params"]["L"], 3);
  EXPECT_TRUE(j["firstMismatchExp"].is_null());
  EXPECT_EQ(j["passed"], true);
}

TEST(Identities, RenderCapDropsOversizedPolynomials) {
  EXPECT_EQ(renderCapped(P("1 + q")), "1 + q");
  EXPECT_FALSE(renderCapped(qBinom(20, 20), 16));
}
