#include "qverify/identities.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "qverify/bressoud.hpp"
#include "qverify/qcomb.hpp"
#include "qverify/transforms.hpp"

namespace qverify {

// ---------------------------------------------------------------------------
// Finite Andrews-Gordon multi-sum and the Theorem-1 construction

namespace {

void validate(const FodaQuanoParams& p) {
  if (p.nu < 1 || p.s < 0 || p.s >= p.nu || p.L < 0) {
    throw std::invalid_argument("FodaQuanoParams: need nu >= 1, 0 <= s < nu, L >= 0");
  }
}

class FodaQuanoEnumerator {
 public:
  explicit FodaQuanoEnumerator(const FodaQuanoParams& p) : p_(p) {}

  Poly run() {
    visit(2, p_.L, 0, 0, Poly(1), 0, 0);
    return std::move(sum_);
  }

 private:
  // Level i picks N_i <= upper. prevN / prevSlack belong to level i-1, whose
  // binomial [n_{i-1} + slack_{i-1}; n_{i-1}] is only known once N_i is fixed.
  void visit(int64_t i, int64_t upper, int64_t partial, int64_t exponent, const Poly& product, int64_t prevN,
             int64_t prevSlack) {
    const int64_t excess = std::max<int64_t>(i + p_.s - p_.nu, 0);
    const bool linear = i >= p_.nu + 1 - p_.s;
    for (int64_t Ni = 0; Ni <= upper; ++Ni) {
      const int64_t slack = p_.L - 2 * (partial + Ni) - excess;
      if (slack < 0) break;
      const int64_t e = exponent + Ni * Ni + (linear ? Ni : 0);
      Poly next = i > 2 ? product * qBinom(prevN - Ni, prevSlack) : product;
      if (i == p_.nu) {
        sum_.addShifted(next * qBinom(Ni, slack), e);
      } else {
        visit(i + 1, Ni, partial + Ni, e, next, Ni, slack);
      }
    }
  }

  FodaQuanoParams p_;
  Poly sum_;
};

}  // namespace

Poly fodaQuanoLhs(const FodaQuanoParams& p) {
  validate(p);
  if (p.nu == 1) return Poly(1);
  return FodaQuanoEnumerator(p).run();
}

Poly fodaQuanoRhs(const FodaQuanoParams& p) {
  validate(p);
  const int64_t K = 2 * p.nu + 1;
  return thetaSum(ThetaSumSpec::floor(Affine{1, 0}, QuadraticExponent{K, 1 + 2 * p.s, 0, 2}, K, p.s), p.L);
}

Poly theorem1Lhs(const FodaQuanoParams& p) {
  validate(p);
  return applyTransform(KernelKind::C, p.L, [&p](int64_t k) { return fodaQuanoLhs({p.nu, p.s, k}); });
}

Poly theorem1Rhs(const FodaQuanoParams& p) {
  validate(p);
  const int64_t K = 2 * p.nu + 1;
  auto spec = ThetaSumSpec::linear(Affine{2, 1}, QuadraticExponent{(p.nu + 1) * K, (p.nu + 1) * (2 * p.s + 1), 0, 1},
                                   Affine{1, -p.s}, K);
  spec.prefactor = Affine{0, triangular(p.s)};
  return thetaSum(spec, p.L);
}

// ---------------------------------------------------------------------------
// Registry

namespace {

struct Sides {
  Poly lhs;
  Poly rhs;
  /// Further exact equalities that must hold (cross-checks).
  std::vector<std::pair<Poly, Poly>> alsoEqual;
  /// Polynomials that must have nonnegative coefficients.
  std::vector<Poly> nonnegative;
};

struct Entry {
  IdentityDescriptor descriptor;
  std::function<Sides(const ParamMap&)> build;
};

ThetaSumSpec linearSpec(Affine top, QuadraticExponent e, Affine center, int64_t K, Affine prefactor = {}) {
  auto spec = ThetaSumSpec::linear(top, e, center, K);
  spec.prefactor = prefactor;
  return spec;
}

const std::map<std::string, ThetaSumSpec, std::less<>>& thetaSpecs() {
  static const std::map<std::string, ThetaSumSpec, std::less<>> specs = {
      {"eq2.13", ThetaSumSpec::floor({1, 0}, {3, 1, 0, 2}, 3, 0)},
      {"eq2.14", linearSpec({2, 1}, {6, 2, 0, 1}, {1, 0}, 3)},
      {"eq2.16", linearSpec({2, 1}, {6, 2, 0, 1}, {1, 0}, 3)},
      {"eq2.19", linearSpec({2, 1}, {3, 1, 0, 1}, {1, 0}, 3)},
      {"eq3.1", linearSpec({2, 0}, {1, 1, 0, 2}, {1, 0}, 1)},
      {"eq3.2", linearSpec({2, 1}, {1, 1, 0, 2}, {1, 0}, 1)},
      {"eq3.3", ThetaSumSpec::floor({1, 0}, {1, 1, 0, 2}, 2, 0)},
      {"eq3.4", linearSpec({2, 0}, {5, 1, 0, 2}, {1, 0}, 2)},
      {"eq3.5", linearSpec({2, 1}, {5, 3, 0, 2}, {1, 0}, 2)},
      {"eq3.7", linearSpec({2, 0}, {5, 5, 0, 2}, {1, -1}, 2, {1, 1})},
      {"eq3.8", linearSpec({2, 1}, {5, 1, 0, 2}, {1, 0}, 2)},
      {"eq3.9", ThetaSumSpec::floor({1, 0}, {5, 1, 0, 2}, 4, 0)},
      {"eq3.10", linearSpec({2, 1}, {21, 5, 0, 2}, {1, 0}, 4)},
      {"eq3.16x", linearSpec({2, 0}, {2, 0, 0, 1}, {1, 0}, 2)},
      {"eq3.17y", linearSpec({2, 0}, {2, 2, 0, 1}, {1, -1}, 2, {1, 1})},
      {"eq3.18z", linearSpec({2, 1}, {2, 0, 0, 1}, {1, 0}, 2)},
      {"eq3.19w", ThetaSumSpec::floor({1, 0}, {2, 0, 0, 1}, 4, 0)},
      {"eq3.24", linearSpec({2, 1}, {9, 3, 0, 2}, {1, 0}, 3)},
      {"eq3.25", linearSpec({2, 0}, {45, 15, 0, 2}, {1, -1}, 6)},
  };
  return specs;
}

Poly theta(std::string_view id, int64_t L) { return thetaSum(thetaSpecs().find(id)->second, L); }

Poly delta(int64_t L) { return L == 0 ? Poly(1) : Poly(); }

/// sum_n q^{n^2 + shift*n} [L; n]
Poly rogersRamanujanSum(int64_t L, int64_t linear) {
  Poly sum;
  for (int64_t n = 0; n <= L; ++n) sum.addShifted(qBinomTopBottom(L, n), n * n + linear * n);
  return sum;
}

/// sum_k q^{T(k)} [L; k] (-q)_k
Poly boundedLebesgueSum(int64_t L) {
  Poly sum;
  for (int64_t k = 0; k <= L; ++k) sum.addShifted(qBinomTopBottom(L, k) * pochhammer(-1, 1, 1, k), triangular(k));
  return sum;
}

/// prod_{j=1}^{L} (1 + q^j + q^{2j}) = (q^3;q^3)_L / (q)_L
Poly dysonProduct(int64_t L) {
  Poly out(1);
  for (int64_t j = 1; j <= L; ++j) {
    Poly factor = Poly(1);
    factor.addShifted(Poly(1), j);
    factor.addShifted(Poly(1), 2 * j);
    out *= factor;
  }
  return out;
}

int64_t get(const ParamMap& params, const std::string& id, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw MissingParam(id, name);
  return it->second;
}

bool nonnegativeSize(const ParamMap& p, const char* name) {
  auto it = p.find(name);
  return it == p.end() || it->second >= 0;
}

bool foda(const ParamMap& p) {
  return nonnegativeSize(p, "L") && p.at("nu") >= 1 && p.at("s") >= 0 && p.at("s") < p.at("nu");
}

std::vector<Entry> buildEntries() {
  std::vector<Entry> entries;
  auto add = [&entries](std::string id, std::string anchor, std::string description, std::vector<std::string> params,
                        std::map<std::string, ParamRange> ranges, bool positivity,
                        std::function<Sides(const ParamMap&)> build,
                        std::function<bool(const ParamMap&)> admissible = nullptr) {
    if (!admissible) {
      admissible = [](const ParamMap& p) {
        return nonnegativeSize(p, "L") && nonnegativeSize(p, "k") && nonnegativeSize(p, "n");
      };
    }
    entries.push_back(Entry{IdentityDescriptor{std::move(id), std::move(anchor), std::move(description),
                                               std::move(params), std::move(ranges), positivity, std::move(admissible)},
                            std::move(build)});
  };
  const ParamRange L12{0, 12}, L20{0, 20}, L30{0, 30}, L40{0, 40}, A6{-6, 6};

  add("eq1.6", "(1.6)",
      "Borwein decomposition prod_{k<=n}(1-q^{3k-1})(1-q^{3k-2}) = A_n(q^3) - q B_n(q^3) - q^2 C_n(q^3), "
      "with A_n, B_n, C_n >= 0",
      {"n"}, {{"n", L20}}, true, [](const ParamMap& p) {
        const int64_t n = get(p, "eq1.6", "n");
        auto abc = borweinABC(n);
        Sides s{borweinProduct(n), borweinCombination(abc), {}, {}};
        s.nonnegative = {std::move(abc.A), std::move(abc.B), std::move(abc.C)};
        return s;
      });

  add("eq1.7", "(1.7)",
      "Theorem 1 instance G(L, L+1+2s, ..., 2nu+1) >= 0, cross-checked as q^{-T(s)} times the transformed "
      "theta sum at size L+s",
      {"nu", "s", "L"}, {{"nu", {1, 3}}, {"s", {0, 2}}, {"L", {0, 14}}}, true,
      [](const ParamMap& p) {
        const int64_t nu = get(p, "eq1.7", "nu"), s = get(p, "eq1.7", "s"), L = get(p, "eq1.7", "L");
        Poly g = gPoly(theorem1Params(nu, s, L));
        Sides sides{g, monomialShift(theorem1Rhs({nu, s, L + s}), -triangular(s)), {}, {g}};
        return sides;
      },
      foda);

  add("eq2.1", "(2.1)", "sum_k C_{L,k} [k; floor((k-a)/2)] = q^{T(a)} [2L+1; L-a]", {"L", "a"},
      {{"L", L12}, {"a", A6}}, false, [](const ParamMap& p) {
        auto s = kernelIdentitySides(KernelKind::C, get(p, "eq2.1", "L"), get(p, "eq2.1", "a"));
        return Sides{std::move(s.lhs), std::move(s.rhs), {}, {}};
      });

  add("eq2.6a", "(2.6a)", "Berkovich-Uncu: sum_k q^{T(k)} [L;k] (T_{-1}(k,a) + T_{-1}(k,a+1)) = q^{T(a)} [2L+1; L-a]",
      {"L", "a"}, {{"L", L12}, {"a", A6}}, false, [](const ParamMap& p) {
        auto s = berkovichUncuSides(get(p, "eq2.6a", "L"), get(p, "eq2.6a", "a"));
        return Sides{std::move(s.lhs), std::move(s.rhs), {}, {}};
      });

  add("eq2.6c", "(2.6c)", "T_{-1}(k,a) + T_{-1}(k,a+1) = sum_m q^{T(m)} [k;m] [k-m; floor((k-m-a)/2)]", {"k", "a"},
      {{"k", L12}, {"a", A6}}, false, [](const ParamMap& p) {
        const int64_t k = get(p, "eq2.6c", "k"), a = get(p, "eq2.6c", "a");
        Poly rhs;
        for (int64_t m = 0; m <= k; ++m) {
          rhs.addShifted(qBinomTopBottom(k, m) * floorBinom(k - m, k - m - a), triangular(m));
        }
        return Sides{trinomialTm1(k, a) + trinomialTm1(k, a + 1), std::move(rhs), {}, {}};
      });

  add("eq2.6d", "(2.6d)", "Warnaar: sum_k W_{L,k} [2k; k-a] = q^{2a^2} [2L; L-2a]", {"L", "a"},
      {{"L", L12}, {"a", A6}}, false, [](const ParamMap& p) {
        auto s = kernelIdentitySides(KernelKind::W, get(p, "eq2.6d", "L"), get(p, "eq2.6d", "a"));
        return Sides{std::move(s.lhs), std::move(s.rhs), {}, {}};
      });

  add("eq2.6f", "(2.6f)", "odd companion: sum_k O_{L,k} [2k+1; k-a] = q^{4T(a)} [2L; L-2a-1]", {"L", "a"},
      {{"L", L12}, {"a", A6}}, false, [](const ParamMap& p) {
        auto s = kernelIdentitySides(KernelKind::O, get(p, "eq2.6f", "L"), get(p, "eq2.6f", "a"));
        return Sides{std::move(s.lhs), std::move(s.rhs), {}, {}};
      });

  add("eq2.13", "(2.13)", "Schur's bounded pentagonal number theorem: sum_j (-1)^j q^{j(3j+1)/2} [L; floor((L-3j)/2)] = 1",
      {"L"}, {{"L", L40}}, false,
      [](const ParamMap& p) { return Sides{theta("eq2.13", get(p, "eq2.13", "L")), Poly(1), {}, {}}; });

  add("eq2.14", "(2.14)", "sum_k C_{L,k} = sum_j (-1)^j q^{2j(3j+1)} [2L+1; L-3j] >= 0", {"L"}, {{"L", L20}}, true,
      [](const ParamMap& p) {
        const int64_t L = get(p, "eq2.14", "L");
        Poly lhs = applyTransform(KernelKind::C, L, [](int64_t) { return Poly(1); });
        Poly rhs = theta("eq2.14", L);
        return Sides{lhs, rhs, {{rhs, gPoly(GParams{L, L + 1, 8, 4, 3})}}, {lhs}};
      });

  add("eq2.15", "(2.15)", "sum_k C_{L,k} = sum_k q^{T(k)} [L;k] (-q)_k", {"L"}, {{"L", L20}}, false,
      [](const ParamMap& p) {
        const int64_t L = get(p, "eq2.15", "L");
        return Sides{applyTransform(KernelKind::C, L, [](int64_t) { return Poly(1); }), boundedLebesgueSum(L), {}, {}};
      });

  add("eq2.16", "(2.16)", "bounded Lebesgue: sum_k q^{T(k)} [L;k] (-q)_k = sum_j (-1)^j q^{2j(3j+1)} [2L+1; L-3j]",
      {"L"}, {{"L", L30}}, true, [](const ParamMap& p) {
        const int64_t L = get(p, "eq2.16", "L");
        Poly lhs = boundedLebesgueSum(L);
        return Sides{lhs, theta("eq2.16", L), {}, {lhs}};
      });

  add("eq2.19", "(2.19)", "bounded Euler: sum_k (-q)_{L-k} q^{(L+1)k} [L;k] = sum_j (-1)^j q^{3j^2+j} [2L+1; L-3j]",
      {"L"}, {{"L", L30}}, true, [](const ParamMap& p) {
        const int64_t L = get(p, "eq2.19", "L");
        Poly lhs;
        for (int64_t k = 0; k <= L; ++k) {
          lhs.addShifted(pochhammer(-1, 1, 1, L - k) * qBinomTopBottom(L, k), (L + 1) * k);
        }
        Poly rhs = theta("eq2.19", L);
        return Sides{lhs, rhs, {{rhs, gPoly(GParams{L, L + 1, 4, 2, 3})}}, {lhs}};
      });

  add("eq2.21", "(2.21)", "finite Andrews-Gordon multi-sum = sum_j (-1)^j q^{((2nu+1)j^2+(1+2s)j)/2} "
                          "[L; floor((L-(2nu+1)j-s)/2)]",
      {"nu", "s", "L"}, {{"nu", {1, 4}}, {"s", {0, 3}}, {"L", L20}}, false,
      [](const ParamMap& p) {
        FodaQuanoParams fq{get(p, "eq2.21", "nu"), get(p, "eq2.21", "s"), get(p, "eq2.21", "L")};
        return Sides{fodaQuanoLhs(fq), fodaQuanoRhs(fq), {}, {}};
      },
      foda);

  add("eq2.22", "(2.22)", "sum_k C_{L,k} (finite Andrews-Gordon multi-sum at size k) = q^{T(s)} sum_j (-1)^j "
                          "q^{(nu+1)(2nu+1)j^2+(nu+1)(2s+1)j} [2L+1; L-s-(2nu+1)j] >= 0",
      {"nu", "s", "L"}, {{"nu", {1, 3}}, {"s", {0, 2}}, {"L", L12}}, true,
      [](const ParamMap& p) {
        FodaQuanoParams fq{get(p, "eq2.22", "nu"), get(p, "eq2.22", "s"), get(p, "eq2.22", "L")};
        Poly lhs = theorem1Lhs(fq);
        Poly rhs = theorem1Rhs(fq);
        // Same G as the Theorem-1 family, re-indexed: N = L - s, M = L + 1 + s.
        GParams g = theorem1Params(fq.nu, fq.s, 0);
        g.N = fq.L - fq.s;
        g.M = fq.L + 1 + fq.s;
        Poly viaG = monomialShift(gPoly(g), triangular(fq.s));
        return Sides{lhs, rhs, {{rhs, viaG}}, {lhs}};
      },
      foda);

  add("eq3.1", "(3.1)", "sum_j (-1)^j q^{T(j)} [2L; L-j] = delta_{L,0}", {"L"}, {{"L", L40}}, false,
      [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.1", "L");
        return Sides{theta("eq3.1", L), delta(L), {}, {}};
      });

  add("eq3.2", "(3.2)", "sum_j (-1)^j q^{T(j)} [2L+1; L-j] = 0", {"L"}, {{"L", L30}}, false,
      [](const ParamMap& p) { return Sides{theta("eq3.2", get(p, "eq3.2", "L")), Poly(), {}, {}}; });

  add("eq3.3", "(3.3)", "sum_j (-1)^j q^{T(j)} [L; floor((L-2j)/2)] = delta_{L,0}", {"L"}, {{"L", L40}}, false,
      [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.3", "L");
        return Sides{theta("eq3.3", L), delta(L), {}, {}};
      });

  add("eq3.4", "(3.4)",
      "Bressoud's bounded version of the first Rogers-Ramanujan identity: W_{L,0} = sum_n q^{n^2} [L;n] = "
      "sum_j (-1)^j q^{(5j+1)j/2} [2L; L-2j]",
      {"L"}, {{"L", L30}}, false, [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.4", "L");
        Poly lhs = rogersRamanujanSum(L, 0);
        return Sides{lhs, theta("eq3.4", L), {{lhs, kernel(KernelKind::W, L, 0)}}, {}};
      });

  add("eq3.5", "(3.5)",
      "Warnaar's bounded version of the second Rogers-Ramanujan identity: C_{L,0} = sum_n q^{n^2+n} [L;n] = "
      "sum_j (-1)^j q^{(5j^2+3j)/2} [2L+1; L-2j]",
      {"L"}, {{"L", L30}}, false, [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.5", "L");
        Poly lhs = rogersRamanujanSum(L, 1);
        return Sides{lhs, theta("eq3.5", L), {{lhs, kernel(KernelKind::C, L, 0)}}, {}};
      });

  add("eq3.7", "(3.7)", "q^{L+1} sum_j (-1)^j q^{5T(j)} [2L; L-2j-1] = 0", {"L"}, {{"L", L30}}, false,
      [](const ParamMap& p) { return Sides{theta("eq3.7", get(p, "eq3.7", "L")), Poly(), {}, {}}; });

  add("eq3.8", "(3.8)", "sum_n q^{n^2} [L;n] = sum_j (-1)^j q^{(5j^2+j)/2} [2L+1; L-2j]", {"L"}, {{"L", L30}}, false,
      [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.8", "L");
        return Sides{rogersRamanujanSum(L, 0), theta("eq3.8", L), {}, {}};
      });

  add("eq3.9", "(3.9)", "sum_n q^{n^2} [floor(k/2); n] = sum_j (-1)^j q^{(5j^2+j)/2} [k; floor((k-4j)/2)]", {"k"},
      {{"k", L30}}, false, [](const ParamMap& p) {
        const int64_t k = get(p, "eq3.9", "k");
        return Sides{rogersRamanujanSum(k / 2, 0), theta("eq3.9", k), {}, {}};
      });

  add("eq3.10", "(3.10)",
      "sum_{k,n} C_{L,k} q^{n^2} [floor(k/2); n] = sum_j (-1)^j q^{(21j^2+5j)/2} [2L+1; L-4j] >= 0", {"L"},
      {{"L", L12}}, true, [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.10", "L");
        Poly lhs = applyTransform(KernelKind::C, L, [](int64_t k) { return rogersRamanujanSum(k / 2, 0); });
        Poly rhs = theta("eq3.10", L);
        return Sides{lhs, rhs, {{rhs, gPoly(GParams{L, L + 1, 13, 8, 4})}}, {lhs}};
      });

  add("eq3.16x", "(3.16x)", "sum_j (-1)^j q^{2j^2} [2L; L-2j] = (-q;q^2)_L", {"L"}, {{"L", L30}}, false,
      [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.16x", "L");
        return Sides{theta("eq3.16x", L), pochhammer(-1, 1, 2, L), {}, {}};
      });

  add("eq3.17y", "(3.17y)", "q^{L+1} sum_j (-1)^j q^{2j^2+2j} [2L; L-2j-1] = 0", {"L"}, {{"L", L30}}, false,
      [](const ParamMap& p) { return Sides{theta("eq3.17y", get(p, "eq3.17y", "L")), Poly(), {}, {}}; });

  add("eq3.18z", "(3.18z)", "sum_j (-1)^j q^{2j^2} [2L+1; L-2j] = (-q;q^2)_L", {"L"}, {{"L", L30}}, false,
      [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.18z", "L");
        return Sides{theta("eq3.18z", L), pochhammer(-1, 1, 2, L), {}, {}};
      });

  add("eq3.19w", "(3.19w)", "sum_j (-1)^j q^{2j^2} [k; floor((k-4j)/2)] = (-q;q^2)_{floor(k/2)}", {"k"},
      {{"k", L30}}, false, [](const ParamMap& p) {
        const int64_t k = get(p, "eq3.19w", "k");
        return Sides{theta("eq3.19w", k), pochhammer(-1, 1, 2, k / 2), {}, {}};
      });

  add("eq3.24", "(3.24)", "Dyson: sum_j (-1)^j q^{T(3j)} [2L+1; L-3j] = (q^3;q^3)_L / (q)_L", {"L"}, {{"L", L30}},
      false, [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.24", "L");
        return Sides{theta("eq3.24", L), dysonProduct(L), {}, {}};
      });

  add("eq3.25", "(3.25)",
      "sum_j (-1)^j q^{5T(3j)} [2L; L-1-6j] = sum_k O_{L,k} (q^3;q^3)_k / (q)_k >= 0", {"L"}, {{"L", L12}}, true,
      [](const ParamMap& p) {
        const int64_t L = get(p, "eq3.25", "L");
        Poly lhs = theta("eq3.25", L);
        Poly rhs = applyTransform(KernelKind::O, L, dysonProduct);
        return Sides{lhs, rhs, {{lhs, gPoly(GParams{L - 1, L + 1, 30, 15, 6})}}, {lhs}};
      });

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.descriptor.id < b.descriptor.id; });
  return entries;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = buildEntries();
  return all;
}

const Entry* findEntry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.descriptor.id == id) return &e;
  }
  return nullptr;
}

}  // namespace

const std::vector<IdentityDescriptor>& registryList() {
  static const std::vector<IdentityDescriptor> list = [] {
    std::vector<IdentityDescriptor> out;
    for (const auto& e : entries()) out.push_back(e.descriptor);
    return out;
  }();
  return list;
}

bool isRegistered(std::string_view id) { return findEntry(id) != nullptr; }

const IdentityDescriptor& registryLookup(std::string_view id) {
  const Entry* entry = findEntry(id);
  if (!entry) throw UnknownIdentity(id);
  return entry->descriptor;
}

ThetaSumSpec thetaSpecFor(std::string_view id) {
  auto it = thetaSpecs().find(id);
  if (it == thetaSpecs().end()) throw UnknownIdentity(id);
  return it->second;
}

IdentityReport verify(std::string_view id, const ParamMap& params) {
  const Entry* entry = findEntry(id);
  if (!entry) throw UnknownIdentity(id);
  const auto& d = entry->descriptor;

  IdentityReport report;
  report.identityId = d.id;
  for (const auto& name : d.params) {
    auto it = params.find(name);
    if (it == params.end()) throw MissingParam(d.id, name);
    report.params[name] = it->second;
  }
  if (d.admissible && !d.admissible(report.params)) {
    throw std::invalid_argument("inadmissible parameters for identity '" + d.id + "'");
  }

  const auto start = std::chrono::steady_clock::now();
  Sides sides = entry->build(report.params);

  report.firstMismatchExp = firstMismatch(sides.lhs, sides.rhs);
  for (const auto& [a, b] : sides.alsoEqual) {
    if (report.firstMismatchExp) break;
    report.firstMismatchExp = firstMismatch(a, b);
  }
  for (const auto& p : sides.nonnegative) {
    if (report.negativeWitness) break;
    report.negativeWitness = isNonnegative(p).witness;
  }
  report.passed = !report.firstMismatchExp && !report.negativeWitness;
  report.lhs = renderCapped(sides.lhs);
  report.rhs = renderCapped(sides.rhs);
  report.elapsedMillis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

}  // namespace qverify
