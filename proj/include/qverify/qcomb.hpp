#pragma once

#include <cstdint>

#include "qverify/poly.hpp"

namespace qverify {

/// Triangular number T(j) = j(j+1)/2, defined for all integers; T(j) == T(-1-j).
constexpr int64_t triangular(int64_t j) { return j * (j + 1) / 2; }

/// Floor division rounding toward negative infinity. b must be positive.
constexpr int64_t floorDiv(int64_t a, int64_t b) {
  const int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr int64_t ceilDiv(int64_t a, int64_t b) { return -floorDiv(-a, b); }

/**
 * Gaussian binomial (q)_{m+n} / ((q)_m (q)_n), i.e. [m+n; m]_q.
 *
 * Zero whenever m < 0 or n < 0. Values come from a process-wide cache filled
 * by the Pascal recurrence; the returned reference stays valid for the
 * lifetime of the program. Safe to call from several threads.
 */
const Poly& qBinom(int64_t m, int64_t n);

/// [top; bottom]_q, zero unless 0 <= bottom <= top.
const Poly& qBinomTopBottom(int64_t top, int64_t bottom);

/// [top; floor(offset / 2)]_q.
const Poly& floorBinom(int64_t top, int64_t offset);

/// prod_{j=0}^{m-1} (1 - sign * q^(s + j*t)), i.e. (sign*q^s; q^t)_m.
Poly pochhammer(int sign, int64_t s, int64_t t, int64_t m);

/// [L; m, k]_q = [L; m]_q [L-m; k]_q.
Poly doubleBinom(int64_t L, int64_t m, int64_t k);

/// Andrews-Baxter trinomial T_{-1}(k, a).
Poly trinomialTm1(int64_t k, int64_t a);

/// Number of cached binomials (diagnostics).
std::size_t qBinomCacheSize();

}  // namespace qverify
