#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qverify/poly.hpp"

namespace qverify {

using ParamMap = std::map<std::string, int64_t>;

/// Verdict for one identity instance.
/// Invariant: passed == (!firstMismatchExp && !negativeWitness).
struct IdentityReport {
  std::string identityId;
  ParamMap params;
  bool passed = false;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  std::optional<int64_t> firstMismatchExp;
  std::optional<int64_t> negativeWitness;
  int64_t elapsedMillis = 0;
  // Series checks only.
  std::optional<int64_t> cap;
  std::vector<std::string> notes;
};

/// Rendered polynomials longer than this are dropped from reports.
inline constexpr std::size_t kMaxRenderedChars = 4096;

std::optional<std::string> renderCapped(const Poly& p, std::size_t maxChars = kMaxRenderedChars);

/// Fixed key set: identityId, params, passed, lhs, rhs, firstMismatchExp,
/// negativeWitness, elapsedMillis (absent optionals are null). Series reports
/// additionally carry cap and notes.
nlohmann::ordered_json toJson(const IdentityReport& report);

}  // namespace qverify
