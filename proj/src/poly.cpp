#include "qverify/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qverify {

Poly::Poly(long constant) : Poly(Integer(constant)) {}

Poly::Poly(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Integer& coeff, int64_t exponent) {
  Poly p;
  if (coeff != 0) {
    p.minExp_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

Poly Poly::fromCoefficients(int64_t minExp, std::vector<Integer> coeffs) {
  Poly p;
  p.minExp_ = minExp;
  p.coeffs_ = std::move(coeffs);
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    minExp_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    minExp_ += static_cast<int64_t>(lead);
  }
}

Integer Poly::coefficient(int64_t exponent) const {
  if (isZero() || exponent < minExp_ || exponent > maxExp()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - minExp_)];
}

Integer Poly::valueAtOne() const {
  Integer sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

void Poly::addShifted(const Poly& p, int64_t shift, int sign) {
  if (p.isZero()) return;
  const int64_t lo = p.minExp_ + shift;
  const int64_t hi = p.maxExp() + shift;
  if (isZero()) {
    minExp_ = lo;
    coeffs_.assign(p.coeffs_.size(), Integer(0));
  } else {
    if (lo < minExp_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(minExp_ - lo), Integer(0));
      minExp_ = lo;
    }
    if (hi > maxExp()) coeffs_.resize(static_cast<std::size_t>(hi - minExp_ + 1), Integer(0));
  }
  const std::size_t offset = static_cast<std::size_t>(lo - minExp_);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (sign > 0) {
      coeffs_[offset + i] += p.coeffs_[i];
    } else {
      coeffs_[offset + i] -= p.coeffs_[i];
    }
  }
  canonicalize();
}

Poly& Poly::operator+=(const Poly& other) {
  addShifted(other, 0, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  addShifted(other, 0, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.isZero() || b.isZero()) return Poly();
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
    if (mpz_sgn(ai) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
    }
  }
  return Poly::fromCoefficients(a.minExp_ + b.minExp_, std::move(out));
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Poly monomialShift(const Poly& p, int64_t k) {
  if (p.isZero()) return p;
  return Poly::fromCoefficients(p.minExp() + k, p.coefficients());
}

Poly dilate(const Poly& p, int64_t t) {
  if (t < 1) throw std::invalid_argument("dilate: factor must be >= 1");
  if (p.isZero() || t == 1) return p;
  const auto& src = p.coefficients();
  std::vector<Integer> out((src.size() - 1) * static_cast<std::size_t>(t) + 1);
  for (std::size_t i = 0; i < src.size(); ++i) out[i * static_cast<std::size_t>(t)] = src[i];
  return Poly::fromCoefficients(p.minExp() * t, std::move(out));
}

Poly reverse(const Poly& p) {
  if (p.isZero()) return p;
  std::vector<Integer> out(p.coefficients().rbegin(), p.coefficients().rend());
  return Poly::fromCoefficients(-p.maxExp(), std::move(out));
}

Poly timesOneMinus(const Poly& p, int64_t e, int sign) {
  Poly out = p;
  out.addShifted(p, e, sign > 0 ? -1 : 1);
  return out;
}

NonnegativityVerdict isNonnegative(const Poly& p) {
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) < 0) return {false, p.minExp() + static_cast<int64_t>(i)};
  }
  return {};
}

std::optional<int64_t> firstMismatch(const Poly& a, const Poly& b) {
  if (a == b) return std::nullopt;
  int64_t lo = std::min(a.isZero() ? b.minExp() : a.minExp(), b.isZero() ? a.minExp() : b.minExp());
  int64_t hi = std::max(a.maxExp(), b.maxExp());
  for (int64_t e = lo; e <= hi; ++e) {
    if (a.coefficient(e) != b.coefficient(e)) return e;
  }
  return std::nullopt;
}

std::string toString(const Poly& p) {
  if (p.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const int64_t e = p.minExp() + static_cast<int64_t>(i);
    const bool negative = sgn(c[i]) < 0;
    const Integer mag = abs(c[i]);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'q';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    std::map<int64_t, Integer> terms;
    skipSpace();
    if (atEnd()) fail("empty input");
    bool firstTerm = true;
    while (true) {
      skipSpace();
      if (atEnd()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skipSpace();
      } else if (!firstTerm) {
        fail("expected '+' or '-'");
      }
      firstTerm = false;
      auto [coeff, exponent] = parseTerm();
      terms[exponent] += sign > 0 ? coeff : Integer(-coeff);
    }
    if (terms.empty()) return Poly();
    const int64_t lo = terms.begin()->first;
    const int64_t hi = terms.rbegin()->first;
    std::vector<Integer> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e - lo)] = c;
    return Poly::fromCoefficients(lo, std::move(coeffs));
  }

 private:
  std::pair<Integer, int64_t> parseTerm() {
    Integer coeff = 1;
    bool haveCoeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(readDigits());
      haveCoeff = true;
      skipSpace();
      if (atEnd() || peek() != '*') return {coeff, 0};
      get();
      skipSpace();
    }
    if (atEnd() || peek() != 'q') fail(haveCoeff ? "expected 'q' after '*'" : "expected term");
    get();
    skipSpace();
    int64_t exponent = 1;
    if (!atEnd() && peek() == '^') {
      get();
      skipSpace();
      bool negative = false;
      if (!atEnd() && (peek() == '-' || peek() == '+')) negative = get() == '-';
      if (atEnd() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exponent = std::stoll(readDigits());
      if (negative) exponent = -exponent;
    }
    return {coeff, exponent};
  }

  std::string readDigits() {
    std::string digits;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
    return digits;
  }

  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parsePoly: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parsePoly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace qverify
