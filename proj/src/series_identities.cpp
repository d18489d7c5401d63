#include "qverify/series_identities.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "qverify/identities.hpp"
#include "qverify/qcomb.hpp"

namespace qverify {

Series productSide(const ProductSideSpec& spec, int64_t cap) {
  Series out = Series::one(cap);
  for (const auto& factor : spec.numerator) {
    if (factor.modulus < 1) throw std::invalid_argument("productSide: modulus must be >= 1");
    for (int64_t start : factor.starts) {
      if (start < 0) throw std::invalid_argument("productSide: negative start exponent");
      for (int64_t e = start; e <= cap; e += factor.modulus) out.timesOneMinus(e);
    }
  }
  if (spec.overQInfinity) {
    Series qInfinity = Series::one(cap);
    for (int64_t e = 1; e <= cap; ++e) qInfinity.timesOneMinus(e);
    out = out * seriesInvert(qInfinity);
  }
  return out;
}

namespace {

class MultiSumEnumerator {
 public:
  MultiSumEnumerator(const MultiSumSpec& spec, int64_t cap) : spec_(spec), cap_(cap), sum_(cap) {}

  Series run() {
    if (spec_.dimension < 1) throw std::invalid_argument("multiSumSide: dimension must be >= 1");
    if (!spec_.lowerBound) throw PruningBoundUnavailable(spec_.identityId + ": no lower bound supplied");
    visit();
    return std::move(sum_);
  }

 private:
  void visit() {
    const auto depth = index_.size();
    if (depth == static_cast<std::size_t>(spec_.dimension)) {
      Series term = spec_.term(index_, cap_);
      if (term.cap() < cap_) throw std::logic_error(spec_.identityId + ": term truncated below the cap");
      sum_ += term.truncated(cap_);
      return;
    }
    const int64_t upper = spec_.decreasingChain && depth > 0 ? index_.back() : -1;
    // A coordinate the exponent does not grow with would run past this.
    const int64_t hardLimit = 64 * (cap_ + 1);
    std::optional<int64_t> previous;
    for (int64_t v = 0; upper < 0 || v <= upper; ++v) {
      if (v > hardLimit) {
        throw PruningBoundUnavailable(spec_.identityId + ": lower bound never exceeds the cap along coordinate " +
                                      std::to_string(depth));
      }
      index_.push_back(v);
      const auto bound = spec_.lowerBound(index_);
      if (!bound) throw PruningBoundUnavailable(spec_.identityId + ": lower bound unavailable");
      if (previous && *bound < *previous) {
        throw PruningBoundUnavailable(spec_.identityId + ": lower bound is not monotone");
      }
      previous = bound;
      if (*bound > cap_) {
        index_.pop_back();
        break;
      }
      visit();
      index_.pop_back();
    }
  }

  const MultiSumSpec& spec_;
  int64_t cap_;
  Series sum_;
  std::vector<int64_t> index_;
};

/// Shared pieces for the concrete sum sides, all truncated at one cap.
class TermKit {
 public:
  explicit TermKit(int64_t cap) : cap_(cap) {
    invQ_.push_back(Series::one(cap));
    for (int64_t m = 1; m <= cap; ++m) {
      invQ_.push_back(invQ_.back());
      invQ_.back().divideOneMinus(m);
    }
    invQ2_.push_back(Series::one(cap));
    for (int64_t m = 1; 2 * m <= cap; ++m) {
      invQ2_.push_back(invQ2_.back());
      invQ2_.back().divideOneMinus(2 * m);
    }
  }

  int64_t cap() const { return cap_; }

  /// 1/(q)_m; factors past the cap are invisible.
  const Series& invQ(int64_t m) const { return invQ_[static_cast<std::size_t>(std::min(m, cap_))]; }
  /// 1/(q^2;q^2)_m
  const Series& invQ2(int64_t m) const {
    return invQ2_[static_cast<std::size_t>(std::min<int64_t>(m, static_cast<int64_t>(invQ2_.size()) - 1))];
  }

  /// (sign q^s; q^t)_m truncated at the cap.
  Series pochhammerSeries(int sign, int64_t s, int64_t t, int64_t m) const {
    Series out = Series::one(cap_);
    for (int64_t j = 0; j < m && s + j * t <= cap_; ++j) out.timesOneMinus(s + j * t, sign);
    return out;
  }

 private:
  int64_t cap_;
  std::vector<Series> invQ_;
  std::vector<Series> invQ2_;
};

using Bound = std::function<std::optional<int64_t>(IndexTuple)>;

struct SeriesEntry {
  SeriesIdentityDescriptor descriptor;
  ProductSideSpec product;
  std::function<MultiSumSpec(const TermKit&)> sum;
};

Series fromPoly(const Poly& p, const TermKit& kit) { return Series::fromPoly(p, kit.cap()); }

/// Leading-exponent bound for (N_1 >= ... >= N_9) chains:
/// sum of squares plus the linear N_8 + N_9 terms present in the prefix.
std::optional<int64_t> chainBound(IndexTuple prefix) {
  int64_t total = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    total += prefix[i] * prefix[i];
    if (i >= 7) total += prefix[i];
  }
  return total;
}

MultiSumSpec nineFold(std::string id, const TermKit& kit, bool lastOverQ2) {
  MultiSumSpec spec;
  spec.identityId = std::move(id);
  spec.dimension = 9;
  spec.decreasingChain = true;
  spec.lowerBound = chainBound;
  spec.term = [&kit, lastOverQ2](IndexTuple N, int64_t) {
    const int64_t e = *chainBound(N);
    Series out(kit.cap());
    if (e > kit.cap()) return out;
    const int64_t reduced = kit.cap() - e;
    Series acc = Series::one(reduced);
    for (std::size_t i = 0; i < 9; ++i) {
      const int64_t n = N[i] - (i + 1 < 9 ? N[i + 1] : 0);
      if (n == 0) continue;
      acc = acc * ((i == 8 && lastOverQ2) ? kit.invQ2(n) : kit.invQ(n));
    }
    return acc.truncated(kit.cap()).shifted(e);
  };
  return spec;
}

/// q^e * prod(factors) at the kit's cap, or zero if e exceeds it.
Series term(const TermKit& kit, int64_t e, std::initializer_list<const Series*> factors) {
  if (e > kit.cap()) return Series(kit.cap());
  Series acc = Series::one(kit.cap() - e);
  for (const Series* f : factors) acc = acc * *f;
  return acc.truncated(kit.cap()).shifted(e);
}

MultiSumSpec indexedSum(std::string id, Bound bound, std::function<Series(IndexTuple)> build, int dimension) {
  MultiSumSpec spec;
  spec.identityId = std::move(id);
  spec.dimension = dimension;
  spec.lowerBound = std::move(bound);
  spec.term = [build = std::move(build)](IndexTuple index, int64_t) { return build(index); };
  return spec;
}

PochhammerFactor triple(int64_t a, int64_t b, int64_t c, int64_t m) { return PochhammerFactor{{a, b, c}, m}; }

std::vector<SeriesEntry> buildSeriesEntries() {
  std::vector<SeriesEntry> out;
  auto T = [](int64_t j) { return triangular(j); };

  out.push_back({{"eq2.17", "(2.17)", "Lebesgue: sum_m q^{T(m)} (-q)_m / (q)_m = (q^4;q^4)_inf / (q)_inf", 100, {}},
                 {{PochhammerFactor{{4}, 4}}, true},
                 [T](const TermKit& kit) {
                   return indexedSum(
                       "eq2.17", [T](IndexTuple i) { return std::optional<int64_t>(T(i[0])); },
                       [&kit, T](IndexTuple i) {
                         const int64_t m = i[0];
                         Series num = kit.pochhammerSeries(-1, 1, 1, m);
                         return term(kit, T(m), {&num, &kit.invQ(m)});
                       },
                       1);
                 }});

  out.push_back({{"eq3.11", "(3.11)",
                  "sum_{m,k,n} q^{T(m)+T(m+k)+n^2} [floor(k/2); n] / ((q)_m (q)_k) = (q^21,q^8,q^13;q^21)_inf / (q)_inf",
                  100,
                  {"product side printed with subscript n in a limit statement; evaluated with subscript infinity"}},
                 {{triple(21, 8, 13, 21)}, true},
                 [T](const TermKit& kit) {
                   return indexedSum(
                       "eq3.11",
                       [T](IndexTuple i) {
                         int64_t b = 2 * T(i[0]);
                         if (i.size() >= 2) b = T(i[0]) + T(i[0] + i[1]);
                         if (i.size() >= 3) b += i[2] * i[2];
                         return std::optional<int64_t>(b);
                       },
                       [&kit, T](IndexTuple i) {
                         const int64_t m = i[0], k = i[1], n = i[2];
                         const Poly& binom = qBinomTopBottom(k / 2, n);
                         if (binom.isZero()) return Series(kit.cap());
                         Series b = fromPoly(binom, kit);
                         return term(kit, T(m) + T(m + k) + n * n, {&b, &kit.invQ(m), &kit.invQ(k)});
                       },
                       3);
                 }});

  out.push_back({{"eq3.12", "(3.12)",
                  "Andrews-Gordon mod 21: sum q^{N_1^2+...+N_9^2+N_8+N_9} / ((q)_{n_1}...(q)_{n_9}) = "
                  "(q^21,q^8,q^13;q^21)_inf / (q)_inf",
                  40,
                  {}},
                 {{triple(21, 8, 13, 21)}, true},
                 [](const TermKit& kit) { return nineFold("eq3.12", kit, false); }});

  out.push_back({{"eq3.13", "(3.13)",
                  "sum_{m,k,n} q^{k^2+(m+k)^2+n^2} [k;n] / ((q)_m (q)_{2k}) = (q^21,q^10,q^11;q^21)_inf / (q)_inf",
                  100,
                  {}},
                 {{triple(21, 10, 11, 21)}, true},
                 [](const TermKit& kit) {
                   // index order (k, n, m)
                   return indexedSum(
                       "eq3.13",
                       [](IndexTuple i) {
                         const int64_t k = i[0];
                         int64_t b = 2 * k * k;
                         if (i.size() >= 2) b += i[1] * i[1];
                         if (i.size() >= 3) b = k * k + (i[2] + k) * (i[2] + k) + i[1] * i[1];
                         return std::optional<int64_t>(b);
                       },
                       [&kit](IndexTuple i) {
                         const int64_t k = i[0], n = i[1], m = i[2];
                         const Poly& binom = qBinomTopBottom(k, n);
                         if (binom.isZero()) return Series(kit.cap());
                         Series b = fromPoly(binom, kit);
                         return term(kit, k * k + (m + k) * (m + k) + n * n, {&b, &kit.invQ(m), &kit.invQ(2 * k)});
                       },
                       3);
                 }});

  // eq3.14 / eq3.15: index order (k, n, m); `pattern` selects 2T(m+k) instead of the printed 2T(m+n).
  auto oddMod21 = [T](std::string id, bool pattern, bool nTriangular) {
    return [T, id, pattern, nTriangular](const TermKit& kit) {
      auto nPart = [T, nTriangular](int64_t n) { return nTriangular ? 2 * T(n) : n * n; };
      auto exponent = [T, pattern, nPart](int64_t k, int64_t n, int64_t m) {
        return 2 * T(k) + 2 * T(m + (pattern ? k : n)) + nPart(n);
      };
      return indexedSum(
          id,
          [T, pattern, nPart, exponent](IndexTuple i) {
            const int64_t k = i[0];
            if (i.size() == 1) return std::optional<int64_t>(2 * T(k) + (pattern ? 2 * T(k) : 0));
            const int64_t n = i[1];
            if (i.size() == 2) return std::optional<int64_t>(2 * T(k) + 2 * T(pattern ? k : n) + nPart(n));
            return std::optional<int64_t>(exponent(k, n, i[2]));
          },
          [&kit, exponent](IndexTuple i) {
            const int64_t k = i[0], n = i[1], m = i[2];
            const Poly& binom = qBinomTopBottom(k, n);
            if (binom.isZero()) return Series(kit.cap());
            Series b = fromPoly(binom, kit);
            return term(kit, exponent(k, n, m), {&b, &kit.invQ(m), &kit.invQ(2 * k + 1)});
          },
          3);
    };
  };
  const std::string printed14 = "exponent read as printed: 2T(k)+2T(m+n)+2T(n)";
  const std::string pattern14 = "exponent read by family pattern: 2T(k)+2T(m+k)+2T(n)";
  const std::string printed15 = "exponent read as printed: 2T(k)+2T(m+n)+n^2";
  const std::string pattern15 = "exponent read by family pattern: 2T(k)+2T(m+k)+n^2";
  out.push_back({{"eq3.14-as-printed", "(3.14)",
                  "sum_{m,k,n} q^{2T(k)+2T(m+n)+2T(n)} [k;n] / ((q)_m (q)_{2k+1}) = (q^21,q^5,q^16;q^21)_inf / (q)_inf",
                  100,
                  {printed14}},
                 {{triple(21, 5, 16, 21)}, true},
                 oddMod21("eq3.14-as-printed", false, true)});
  out.push_back({{"eq3.14-pattern", "(3.14)",
                  "sum_{m,k,n} q^{2T(k)+2T(m+k)+2T(n)} [k;n] / ((q)_m (q)_{2k+1}) = (q^21,q^5,q^16;q^21)_inf / (q)_inf",
                  100,
                  {pattern14}},
                 {{triple(21, 5, 16, 21)}, true},
                 oddMod21("eq3.14-pattern", true, true)});
  out.push_back({{"eq3.15-as-printed", "(3.15)",
                  "sum_{m,k,n} q^{2T(k)+2T(m+n)+n^2} [k;n] / ((q)_m (q)_{2k+1}) = (q^21,q^6,q^15;q^21)_inf / (q)_inf",
                  100,
                  {printed15}},
                 {{triple(21, 6, 15, 21)}, true},
                 oddMod21("eq3.15-as-printed", false, false)});
  out.push_back({{"eq3.15-pattern", "(3.15)",
                  "sum_{m,k,n} q^{2T(k)+2T(m+k)+n^2} [k;n] / ((q)_m (q)_{2k+1}) = (q^21,q^6,q^15;q^21)_inf / (q)_inf",
                  100,
                  {pattern15}},
                 {{triple(21, 6, 15, 21)}, true},
                 oddMod21("eq3.15-pattern", true, false)});

  out.push_back({{"eq3.20", "(3.20)",
                  "sum_{m,k} q^{T(m)+T(m+k)} (-q;q^2)_{floor(k/2)} / ((q)_m (q)_k) = (q^20,q^8,q^12;q^20)_inf / (q)_inf",
                  100,
                  {}},
                 {{triple(20, 8, 12, 20)}, true},
                 [T](const TermKit& kit) {
                   return indexedSum(
                       "eq3.20",
                       [T](IndexTuple i) {
                         return std::optional<int64_t>(i.size() == 1 ? 2 * T(i[0]) : T(i[0]) + T(i[0] + i[1]));
                       },
                       [&kit, T](IndexTuple i) {
                         const int64_t m = i[0], k = i[1];
                         Series num = kit.pochhammerSeries(-1, 1, 2, k / 2);
                         return term(kit, T(m) + T(m + k), {&num, &kit.invQ(m), &kit.invQ(k)});
                       },
                       2);
                 }});

  out.push_back({{"eq3.21", "(3.21)",
                  "Bressoud mod 20: sum q^{N_1^2+...+N_9^2+N_8+N_9} / ((q)_{n_1}...(q)_{n_8} (q^2;q^2)_{n_9}) = "
                  "(q^20,q^8,q^12;q^20)_inf / (q)_inf",
                  40,
                  {}},
                 {{triple(20, 8, 12, 20)}, true},
                 [](const TermKit& kit) { return nineFold("eq3.21", kit, true); }});

  out.push_back({{"eq3.22", "(3.22)",
                  "sum_{m,k} q^{k^2+(m+k)^2} (-q;q^2)_k / ((q)_m (q)_{2k}) = (q^20,q^10,q^10;q^20)_inf / (q)_inf",
                  100,
                  {"the factor (q^10;q^20)_inf appears twice in the product side"}},
                 {{triple(20, 10, 10, 20)}, true},
                 [](const TermKit& kit) {
                   // index order (k, m)
                   return indexedSum(
                       "eq3.22",
                       [](IndexTuple i) {
                         const int64_t k = i[0];
                         return std::optional<int64_t>(i.size() == 1 ? 2 * k * k : k * k + (i[1] + k) * (i[1] + k));
                       },
                       [&kit](IndexTuple i) {
                         const int64_t k = i[0], m = i[1];
                         Series num = kit.pochhammerSeries(-1, 1, 2, k);
                         return term(kit, k * k + (m + k) * (m + k), {&num, &kit.invQ(m), &kit.invQ(2 * k)});
                       },
                       2);
                 }});

  out.push_back({{"eq3.23", "(3.23)",
                  "sum_{m,k} q^{2T(k)+2T(m+k)} (-q;q^2)_k / ((q)_m (q)_{2k+1}) = (q^20,q^6,q^14;q^20)_inf / (q)_inf",
                  100,
                  {}},
                 {{triple(20, 6, 14, 20)}, true},
                 [T](const TermKit& kit) {
                   return indexedSum(
                       "eq3.23",
                       [T](IndexTuple i) {
                         const int64_t k = i[0];
                         return std::optional<int64_t>(i.size() == 1 ? 4 * T(k) : 2 * T(k) + 2 * T(i[1] + k));
                       },
                       [&kit, T](IndexTuple i) {
                         const int64_t k = i[0], m = i[1];
                         Series num = kit.pochhammerSeries(-1, 1, 2, k);
                         return term(kit, 2 * T(k) + 2 * T(m + k), {&num, &kit.invQ(m), &kit.invQ(2 * k + 1)});
                       },
                       2);
                 }});

  out.push_back({{"eq3.27", "(3.27)",
                  "sum_{m,k} q^{2T(k)+2T(m+k)} (q^3;q^3)_k / ((q)_m (q)_{2k+1} (q)_k) = (q^15;q^15)_inf / (q)_inf",
                  100,
                  {}},
                 {{PochhammerFactor{{15}, 15}}, true},
                 [T](const TermKit& kit) {
                   return indexedSum(
                       "eq3.27",
                       [T](IndexTuple i) {
                         const int64_t k = i[0];
                         return std::optional<int64_t>(i.size() == 1 ? 4 * T(k) : 2 * T(k) + 2 * T(i[1] + k));
                       },
                       [&kit, T](IndexTuple i) {
                         const int64_t k = i[0], m = i[1];
                         Series num = kit.pochhammerSeries(1, 3, 3, k);
                         return term(kit, 2 * T(k) + 2 * T(m + k),
                                     {&num, &kit.invQ(k), &kit.invQ(m), &kit.invQ(2 * k + 1)});
                       },
                       2);
                 }});

  out.push_back({{"jtp", "(1.13)", "Jacobi triple product at z = q^s: sum_j (-1)^j q^{j^2+sj} = (q^2,q^{1-s},q^{1+s};q^2)_inf",
                  100,
                  {}},
                 {{triple(2, 1, 1, 2)}, false},
                 nullptr});

  std::sort(out.begin(), out.end(),
            [](const SeriesEntry& a, const SeriesEntry& b) { return a.descriptor.id < b.descriptor.id; });
  return out;
}

const std::vector<SeriesEntry>& seriesEntries() {
  static const std::vector<SeriesEntry> all = buildSeriesEntries();
  return all;
}

const SeriesEntry& findSeries(std::string_view id) {
  for (const auto& e : seriesEntries()) {
    if (e.descriptor.id == id) return e;
  }
  throw UnknownIdentity(id);
}

Series jtpSum(int64_t s, int64_t cap) {
  Series out(cap);
  std::vector<Integer> coeffs(static_cast<std::size_t>(cap) + 1);
  const int64_t reach = cap + 2 + (s < 0 ? -s : s);
  for (int64_t j = -reach; j <= reach; ++j) {
    const int64_t e = j * j + s * j;
    if (e < 0 || e > cap) continue;
    coeffs[static_cast<std::size_t>(e)] += (j % 2 != 0) ? -1 : 1;
  }
  return Series::fromPoly(Poly::fromCoefficients(0, std::move(coeffs)), cap);
}

ProductSideSpec jtpProduct(int64_t s) {
  if (s <= -2 || s >= 2) throw std::invalid_argument("jtp: need |s| < 2");
  return ProductSideSpec{{triple(2, 1 - s, 1 + s, 2)}, false};
}

IdentityReport compareSides(const std::string& id, ParamMap params, const Series& lhs, const Series& rhs,
                            std::vector<std::string> notes, int64_t cap,
                            std::chrono::steady_clock::time_point start) {
  IdentityReport report;
  report.identityId = id;
  report.params = std::move(params);
  report.firstMismatchExp = firstMismatch(lhs, rhs);
  report.passed = !report.firstMismatchExp;
  report.lhs = renderCapped(lhs.toPoly());
  report.rhs = renderCapped(rhs.toPoly());
  report.cap = cap;
  report.notes = std::move(notes);
  report.elapsedMillis =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

Series multiSumSide(const MultiSumSpec& spec, int64_t cap) {
  if (cap < 0) throw std::invalid_argument("multiSumSide: cap must be >= 0");
  return MultiSumEnumerator(spec, cap).run();
}

bool jtpCheck(int64_t s, int64_t cap) { return jtpSum(s, cap) == productSide(jtpProduct(s), cap); }

const std::vector<SeriesIdentityDescriptor>& seriesRegistryList() {
  static const std::vector<SeriesIdentityDescriptor> list = [] {
    std::vector<SeriesIdentityDescriptor> out;
    for (const auto& e : seriesEntries()) out.push_back(e.descriptor);
    return out;
  }();
  return list;
}

bool isSeriesRegistered(std::string_view id) {
  return std::any_of(seriesEntries().begin(), seriesEntries().end(),
                     [id](const SeriesEntry& e) { return e.descriptor.id == id; });
}

const SeriesIdentityDescriptor& seriesRegistryLookup(std::string_view id) { return findSeries(id).descriptor; }

ProductSideSpec productSpecFor(std::string_view id) { return findSeries(id).product; }

Series seriesProductSide(std::string_view id, int64_t cap) { return productSide(productSpecFor(id), cap); }

Series seriesSumSide(std::string_view id, int64_t cap) {
  const auto& entry = findSeries(id);
  if (!entry.sum) return jtpSum(0, cap);
  const TermKit kit(cap);
  return multiSumSide(entry.sum(kit), cap);
}

IdentityReport verifySeries(std::string_view id, int64_t cap) {
  const auto& entry = findSeries(id);
  if (!entry.sum) return verifySeriesJtp(0, cap);
  const auto start = std::chrono::steady_clock::now();
  Series lhs = seriesSumSide(id, cap);
  Series rhs = productSide(entry.product, cap);
  return compareSides(entry.descriptor.id, {}, lhs, rhs, entry.descriptor.notes, cap, start);
}

IdentityReport verifySeriesJtp(int64_t s, int64_t cap) {
  const auto start = std::chrono::steady_clock::now();
  Series lhs = jtpSum(s, cap);
  Series rhs = productSide(jtpProduct(s), cap);
  return compareSides("jtp", {{"s", s}}, lhs, rhs, {}, cap, start);
}

}  // namespace qverify
