#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qverify/poly.hpp"

namespace qverify {

/// An exponent that should have been an integer was not.
class NonIntegerExponent : public std::domain_error {
 public:
  NonIntegerExponent(int64_t j, const std::string& what) : std::domain_error(what), j_(j) {}
  int64_t j() const { return j_; }

 private:
  int64_t j_;
};

/// A theta-sum exponent came out negative.
class NegativeExponent : public std::domain_error {
 public:
  NegativeExponent(int64_t j, const std::string& what) : std::domain_error(what), j_(j) {}
  int64_t j() const { return j_; }

 private:
  int64_t j_;
};

/// perL * L + constant
struct Affine {
  int64_t perL = 0;
  int64_t constant = 0;
  constexpr int64_t at(int64_t L) const { return perL * L + constant; }
};

/// (quadratic j^2 + linear j + constant) / denominator
struct QuadraticExponent {
  int64_t quadratic = 0;
  int64_t linear = 0;
  int64_t constant = 0;
  int64_t denominator = 1;
};

/**
 * sum_j sign(j) q^{prefactor(L) + e(j)} [top(L); bottom(j)]_q
 *
 * with sign(j) = (-1)^j when alternating, and bottom(j) either
 * center(L) - K j (linear) or floor((top(L) - K j - s) / 2) (floor).
 */
struct ThetaSumSpec {
  enum class Bottom { Linear, Floor };

  Affine top;
  QuadraticExponent exponent;
  Bottom bottomMode = Bottom::Linear;
  Affine center;  // Linear mode
  int64_t K = 1;
  int64_t s = 0;  // Floor mode
  bool alternating = true;
  Affine prefactor;

  static ThetaSumSpec linear(Affine top, QuadraticExponent e, Affine center, int64_t K);
  static ThetaSumSpec floor(Affine top, QuadraticExponent e, int64_t K, int64_t s);
};

/// Exact evaluation. Throws NonIntegerExponent / NegativeExponent naming the
/// first offending j among the terms with a nonzero binomial.
Poly thetaSum(const ThetaSumSpec& spec, int64_t L);

}  // namespace qverify
