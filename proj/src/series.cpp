#include "qverify/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qverify {

Series::Series(int64_t cap) {
  if (cap < 0) throw std::invalid_argument("Series: cap must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(cap) + 1);
}

Series Series::one(int64_t cap) {
  Series s(cap);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::fromPoly(const Poly& p, int64_t cap) {
  Series s(cap);
  if (p.isZero()) return s;
  if (p.minExp() < 0) throw std::domain_error("Series::fromPoly: negative exponent in polynomial");
  for (int64_t e = p.minExp(); e <= std::min(p.maxExp(), cap); ++e) {
    s.coeffs_[static_cast<std::size_t>(e)] = p.coefficients()[static_cast<std::size_t>(e - p.minExp())];
  }
  return s;
}

bool Series::isZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

Series Series::truncated(int64_t cap) const {
  Series s(cap);
  const std::size_t n = std::min(coeffs_.size(), s.coeffs_.size());
  std::copy_n(coeffs_.begin(), n, s.coeffs_.begin());
  return s;
}

Series Series::shifted(int64_t k) const {
  if (k < 0) throw std::invalid_argument("Series::shifted: negative shift");
  Series s(cap());
  for (int64_t e = 0; e + k <= cap(); ++e) s.coeffs_[static_cast<std::size_t>(e + k)] = coeffs_[static_cast<std::size_t>(e)];
  return s;
}

Poly Series::toPoly() const { return Poly::fromCoefficients(0, coeffs_); }

Series& Series::operator+=(const Series& other) {
  if (other.cap() < cap()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  if (other.cap() < cap()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

void Series::timesOneMinus(int64_t e, int sign) {
  if (e < 0) throw std::invalid_argument("Series::timesOneMinus: negative exponent");
  if (e == 0) {
    for (auto& c : coeffs_) c = sign > 0 ? Integer(0) : Integer(2 * c);
    return;
  }
  // Descending so each step reads the not-yet-updated lower coefficient.
  for (int64_t i = cap(); i >= e; --i) {
    auto& dst = coeffs_[static_cast<std::size_t>(i)];
    const auto& src = coeffs_[static_cast<std::size_t>(i - e)];
    if (sign > 0) {
      dst -= src;
    } else {
      dst += src;
    }
  }
}

void Series::divideOneMinus(int64_t e) {
  if (e < 1) throw std::invalid_argument("Series::divideOneMinus: exponent must be >= 1");
  for (int64_t i = e; i <= cap(); ++i) {
    coeffs_[static_cast<std::size_t>(i)] += coeffs_[static_cast<std::size_t>(i - e)];
  }
}

Series operator*(const Series& a, const Series& b) {
  const int64_t cap = std::min(a.cap(), b.cap());
  Series out(cap);
  for (int64_t i = 0; i <= cap; ++i) {
    const mpz_srcptr ai = a.coeffs_[static_cast<std::size_t>(i)].get_mpz_t();
    if (mpz_sgn(ai) == 0) continue;
    for (int64_t j = 0; i + j <= cap; ++j) {
      mpz_addmul(out.coeffs_[static_cast<std::size_t>(i + j)].get_mpz_t(), ai,
                 b.coeffs_[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  return out;
}

Series seriesInvert(const Series& p) {
  const Integer& c0 = p[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("seriesInvert: constant term is not a unit");
  const int64_t cap = p.cap();
  std::vector<Integer> inv(static_cast<std::size_t>(cap) + 1);
  inv[0] = c0;  // 1/c0 == c0 for c0 = +-1
  for (int64_t n = 1; n <= cap; ++n) {
    Integer acc = 0;
    for (int64_t i = 1; i <= n; ++i) {
      mpz_addmul(acc.get_mpz_t(), p[i].get_mpz_t(), inv[static_cast<std::size_t>(n - i)].get_mpz_t());
    }
    inv[static_cast<std::size_t>(n)] = c0 == 1 ? Integer(-acc) : acc;
  }
  return Series::fromPoly(Poly::fromCoefficients(0, std::move(inv)), cap);
}

std::optional<int64_t> firstMismatch(const Series& a, const Series& b) {
  const int64_t cap = std::min(a.cap(), b.cap());
  for (int64_t e = 0; e <= cap; ++e) {
    if (a[e] != b[e]) return e;
  }
  return std::nullopt;
}

}  // namespace qverify
