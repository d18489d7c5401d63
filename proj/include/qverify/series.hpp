#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qverify/poly.hpp"

namespace qverify {

/// Power series in q with integer coefficients, known up to and including q^cap.
/// Every operation discards exponents above the cap of its result.
class Series {
 public:
  explicit Series(int64_t cap);

  static Series one(int64_t cap);
  /// Truncates p to the cap. Throws std::domain_error if p has negative exponents.
  static Series fromPoly(const Poly& p, int64_t cap);

  int64_t cap() const { return static_cast<int64_t>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& operator[](int64_t e) const { return coeffs_[static_cast<std::size_t>(e)]; }
  bool isZero() const;

  Series truncated(int64_t cap) const;
  /// Multiplies by q^k (k >= 0), dropping what falls past the cap.
  Series shifted(int64_t k) const;
  Poly toPoly() const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  /// In-place multiplication by (1 - sign * q^e).
  void timesOneMinus(int64_t e, int sign = 1);
  /// In-place division by (1 - q^e), e >= 1.
  void divideOneMinus(int64_t e);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  /// Result cap is the smaller of the two caps.
  friend Series operator*(const Series& a, const Series& b);

  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// Multiplicative inverse up to the cap. Throws std::domain_error unless the
/// constant term is 1 or -1.
Series seriesInvert(const Series& p);

std::optional<int64_t> firstMismatch(const Series& a, const Series& b);

}  // namespace qverify
