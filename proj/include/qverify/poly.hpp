#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qverify {

using Integer = mpz_class;

/**
 * Laurent polynomial in q with arbitrary-precision integer coefficients.
 *
 * Stored densely: coefficients()[i] is the coefficient of q^(minExp() + i).
 * The representation is always canonical (no leading or trailing zero
 * coefficients; the zero polynomial has no coefficients and minExp() == 0),
 * so operator== is plain structural comparison.
 */
class Poly {
 public:
  Poly() = default;
  explicit Poly(long constant);
  explicit Poly(const Integer& constant);

  static Poly monomial(const Integer& coeff, int64_t exponent);
  static Poly fromCoefficients(int64_t minExp, std::vector<Integer> coeffs);

  bool isZero() const { return coeffs_.empty(); }
  int64_t minExp() const { return minExp_; }
  /// Highest exponent present; equals minExp() - 1 for the zero polynomial.
  int64_t maxExp() const { return minExp_ + static_cast<int64_t>(coeffs_.size()) - 1; }
  std::size_t termSpan() const { return coeffs_.size(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int64_t exponent) const;

  /// Sum of coefficients, i.e. the value at q = 1.
  Integer valueAtOne() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);

  /// *this += sign * q^shift * p, without materializing the shifted copy.
  void addShifted(const Poly& p, int64_t shift, int sign = 1);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.minExp_ == b.minExp_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void canonicalize();

  int64_t minExp_ = 0;
  std::vector<Integer> coeffs_;
};

inline Poly polyAdd(const Poly& a, const Poly& b) { return a + b; }
inline Poly polyMul(const Poly& a, const Poly& b) { return a * b; }
inline Poly polyNeg(const Poly& a) { return -a; }

/// Multiplies by q^k.
Poly monomialShift(const Poly& p, int64_t k);

/// Substitutes q -> q^t. Throws std::invalid_argument for t < 1.
Poly dilate(const Poly& p, int64_t t);

/// Substitutes q -> 1/q.
Poly reverse(const Poly& p);

/// Multiplies by (1 - sign * q^e) in a single pass.
Poly timesOneMinus(const Poly& p, int64_t e, int sign = 1);

struct NonnegativityVerdict {
  bool nonnegative = true;
  /// Smallest exponent carrying a negative coefficient.
  std::optional<int64_t> witness;
};

NonnegativityVerdict isNonnegative(const Poly& p);

/// Smallest exponent at which a and b differ, if any.
std::optional<int64_t> firstMismatch(const Poly& a, const Poly& b);

/**
 * Text form: terms in ascending exponent order, e.g.
 * "1 + q + 2*q^2 - 3*q^5" or "-q^-1 + 4". The zero polynomial is "0".
 */
std::string toString(const Poly& p);

/// Inverse of toString. Also accepts arbitrary whitespace and repeated exponents.
/// Throws std::invalid_argument on malformed input.
Poly parsePoly(std::string_view text);

}  // namespace qverify
