#include "qverify/bressoud.hpp"

#include <sstream>
#include <stdexcept>

#include "qverify/theta.hpp"

namespace qverify {

std::string toString(const GParams& p) {
  std::ostringstream out;
  out << "G(N=" << p.N << ", M=" << p.M << ", alpha=" << p.alphaK << "/" << p.K << ", beta=" << p.betaK << "/" << p.K
      << ", K=" << p.K << ")";
  return out.str();
}

GParams theorem1Params(int64_t nu, int64_t s, int64_t L) {
  if (nu < 1 || s < 0 || s >= nu) throw std::invalid_argument("theorem1Params: need nu >= 1 and 0 <= s < nu");
  const int64_t K = 2 * nu + 1;
  return GParams{L, L + 1 + 2 * s, (nu + 1) * (K + 1 + 2 * s), (nu + 1) * (K - 1 - 2 * s), K};
}

Poly gPoly(const GParams& p) {
  if (p.K < 1) throw std::invalid_argument("gPoly: K must be >= 1");
  const QuadraticExponent e{p.alphaK + p.betaK, p.alphaK - p.betaK, 0, 2};
  return thetaSum(ThetaSumSpec::linear(Affine{0, p.N + p.M}, e, Affine{0, p.N}, p.K), 0);
}

RegionVerdict regionCheck(const GParams& p) {
  RegionVerdict verdict;
  const bool strict = p.K == 2;
  auto require = [&](bool ok, const char* what) {
    if (!ok) verdict.violated.emplace_back(what);
  };
  auto le = [strict](int64_t a, int64_t b) { return strict ? a < b : a <= b; };

  require(p.K > 1, "K > 1");
  require(p.N >= 0, "N >= 0");
  require(p.M >= 0, "M >= 0");
  require(p.alphaK >= 0, "alpha*K >= 0");
  require(p.betaK >= 0, "beta*K >= 0");
  // K * (1 <= alpha+beta <= 2K-1)
  require(le(p.K, p.alphaK + p.betaK), strict ? "1 < alpha+beta" : "1 <= alpha+beta");
  require(le(p.alphaK + p.betaK, p.K * (2 * p.K - 1)), strict ? "alpha+beta < 2K-1" : "alpha+beta <= 2K-1");
  // K * (beta-K <= N-M <= K-alpha)
  require(le(p.betaK - p.K * p.K, p.K * (p.N - p.M)), strict ? "beta-K < N-M" : "beta-K <= N-M");
  require(le(p.K * (p.N - p.M), p.K * p.K - p.alphaK), strict ? "N-M < K-alpha" : "N-M <= K-alpha");
  verdict.inRegion = verdict.violated.empty();
  return verdict;
}

BorweinTriple borweinABC(int64_t n) {
  if (n < 0) throw std::invalid_argument("borweinABC: n must be >= 0");
  return BorweinTriple{gPoly(GParams{n, n, 5, 4, 3}), gPoly(GParams{n - 1, n + 1, 7, 2, 3}),
                       gPoly(GParams{n - 1, n + 1, 8, 1, 3})};
}

Poly borweinProduct(int64_t n) {
  Poly out(1);
  for (int64_t k = 1; k <= n; ++k) {
    out = timesOneMinus(out, 3 * k - 1);
    out = timesOneMinus(out, 3 * k - 2);
  }
  return out;
}

Poly borweinCombination(const BorweinTriple& abc) {
  Poly out = dilate(abc.A, 3);
  out.addShifted(dilate(abc.B, 3), 1, -1);
  out.addShifted(dilate(abc.C, 3), 2, -1);
  return out;
}

bool borweinDecomposition(int64_t n) { return borweinProduct(n) == borweinCombination(borweinABC(n)); }

}  // namespace qverify
