#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qverify/report.hpp"
#include "qverify/series.hpp"

namespace qverify {

class PruningBoundUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// prod over start in starts of (q^start; q^modulus)_inf.
struct PochhammerFactor {
  std::vector<int64_t> starts;
  int64_t modulus = 1;
};

/// Numerator factors, optionally divided by (q)_inf.
struct ProductSideSpec {
  std::vector<PochhammerFactor> numerator;
  bool overQInfinity = true;
};

Series productSide(const ProductSideSpec& spec, int64_t cap);

using IndexTuple = std::span<const int64_t>;

/**
 * A sum over tuples of nonnegative integers (or, with decreasingChain, over
 * tuples i_1 >= i_2 >= ... >= 0).
 *
 * lowerBound(prefix) must bound from below the lowest exponent of every term
 * whose leading indices equal `prefix`, and must be nondecreasing in the last
 * entry of `prefix`. Returning nullopt means no such bound is known.
 */
struct MultiSumSpec {
  std::string identityId;
  int dimension = 1;
  bool decreasingChain = false;
  std::function<std::optional<int64_t>(IndexTuple prefix)> lowerBound;
  std::function<Series(IndexTuple index, int64_t cap)> term;
};

/// Throws PruningBoundUnavailable if the bound is missing, decreases, or never
/// exceeds the cap along some coordinate.
Series multiSumSide(const MultiSumSpec& spec, int64_t cap);

/// sum_j (-1)^j q^{j^2 + s j} against (q^2, q^{1-s}, q^{1+s}; q^2)_inf, |s| < 2.
bool jtpCheck(int64_t s, int64_t cap);

struct SeriesIdentityDescriptor {
  std::string id;
  std::string anchor;
  std::string description;
  int64_t defaultCap = 100;
  /// Ids ending in "-as-printed"/"-pattern" are alternative readings of one equation.
  std::vector<std::string> notes;
};

/// Sorted by id. Includes both readings of eq3.14 and eq3.15.
const std::vector<SeriesIdentityDescriptor>& seriesRegistryList();
bool isSeriesRegistered(std::string_view id);
const SeriesIdentityDescriptor& seriesRegistryLookup(std::string_view id);

/// Sum side / product side of a registered series identity.
Series seriesSumSide(std::string_view id, int64_t cap);
Series seriesProductSide(std::string_view id, int64_t cap);
ProductSideSpec productSpecFor(std::string_view id);

/// Compares both sides to the cap. "jtp" takes s = 0; use "jtp" with
/// verifySeriesJtp for other shifts. Throws UnknownIdentity.
IdentityReport verifySeries(std::string_view id, int64_t cap);
IdentityReport verifySeriesJtp(int64_t s, int64_t cap);

}  // namespace qverify
