#include "qverify/theta.hpp"

#include "qverify/qcomb.hpp"

namespace qverify {

ThetaSumSpec ThetaSumSpec::linear(Affine top, QuadraticExponent e, Affine center, int64_t K) {
  ThetaSumSpec spec;
  spec.top = top;
  spec.exponent = e;
  spec.bottomMode = Bottom::Linear;
  spec.center = center;
  spec.K = K;
  return spec;
}

ThetaSumSpec ThetaSumSpec::floor(Affine top, QuadraticExponent e, int64_t K, int64_t s) {
  ThetaSumSpec spec;
  spec.top = top;
  spec.exponent = e;
  spec.bottomMode = Bottom::Floor;
  spec.K = K;
  spec.s = s;
  return spec;
}

Poly thetaSum(const ThetaSumSpec& spec, int64_t L) {
  if (spec.K < 1) throw std::invalid_argument("thetaSum: K must be >= 1");
  if (spec.exponent.denominator < 1) throw std::invalid_argument("thetaSum: exponent denominator must be >= 1");
  const int64_t top = spec.top.at(L);
  if (top < 0) return Poly();

  // j-range where 0 <= bottom(j) <= top.
  int64_t jLo = 0;
  int64_t jHi = -1;
  if (spec.bottomMode == ThetaSumSpec::Bottom::Linear) {
    const int64_t center = spec.center.at(L);
    jLo = ceilDiv(center - top, spec.K);
    jHi = floorDiv(center, spec.K);
  } else {
    // floor((top - Kj - s)/2) >= 0  <=>  top - Kj - s >= 0
    // floor((top - Kj - s)/2) <= top <=>  top - Kj - s <= 2 top + 1
    jLo = ceilDiv(-top - spec.s - 1, spec.K);
    jHi = floorDiv(top - spec.s, spec.K);
  }

  const auto& e = spec.exponent;
  const int64_t prefactor = spec.prefactor.at(L);
  Poly sum;
  for (int64_t j = jLo; j <= jHi; ++j) {
    const Poly& binom = spec.bottomMode == ThetaSumSpec::Bottom::Linear
                            ? qBinomTopBottom(top, spec.center.at(L) - spec.K * j)
                            : floorBinom(top, top - spec.K * j - spec.s);
    if (binom.isZero()) continue;
    const int64_t numerator = e.quadratic * j * j + e.linear * j + e.constant;
    if (numerator % e.denominator != 0) {
      throw NonIntegerExponent(j, "theta sum exponent is not an integer at j = " + std::to_string(j));
    }
    const int64_t exponent = numerator / e.denominator;
    if (exponent < 0) {
      throw NegativeExponent(j, "theta sum exponent is negative at j = " + std::to_string(j));
    }
    const int sign = (spec.alternating && (j % 2 != 0)) ? -1 : 1;
    sum.addShifted(binom, prefactor + exponent, sign);
  }
  return sum;
}

}  // namespace qverify
