#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "qverify/poly.hpp"

namespace qverify {

/// Parameters of G(N, M, alpha, beta, K; q). alpha and beta are carried as the
/// integers alphaK = alpha*K and betaK = beta*K so every computation is exact.
struct GParams {
  int64_t N = 0;
  int64_t M = 0;
  int64_t alphaK = 0;
  int64_t betaK = 0;
  int64_t K = 2;

  friend bool operator==(const GParams&, const GParams&) = default;
};

std::string toString(const GParams& p);

/// Theorem-1 family: G(L, L+1+2s, (nu+1)(1+(1+2s)/(2nu+1)), (nu+1)(1-(1+2s)/(2nu+1)), 2nu+1).
GParams theorem1Params(int64_t nu, int64_t s, int64_t L);

struct RegionVerdict {
  bool inRegion = true;
  std::vector<std::string> violated;
};

/**
 * The alternating sum
 *   sum_j (-1)^j q^{j((alphaK+betaK) j + alphaK - betaK)/2} [N+M; N-Kj]_q
 * over the finitely many j with a nonzero binomial.
 *
 * Throws std::invalid_argument if K < 1, and NonIntegerExponent (see
 * theta.hpp) if an exponent fails to be integral.
 */
Poly gPoly(const GParams& p);

/// Membership in the conjectured positivity region, evaluated in integers
/// (every inequality is scaled by K). All inequalities are strict when K = 2.
RegionVerdict regionCheck(const GParams& p);

struct BorweinTriple {
  Poly A;
  Poly B;
  Poly C;
};

/// A_n = G(n,n,5/3,4/3,3), B_n = G(n-1,n+1,7/3,2/3,3), C_n = G(n-1,n+1,8/3,1/3,3).
BorweinTriple borweinABC(int64_t n);

/// prod_{k=1}^n (1-q^{3k-1})(1-q^{3k-2}).
Poly borweinProduct(int64_t n);

/// A_n(q^3) - q B_n(q^3) - q^2 C_n(q^3).
Poly borweinCombination(const BorweinTriple& abc);

bool borweinDecomposition(int64_t n);

}  // namespace qverify
