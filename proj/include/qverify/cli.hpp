#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qverify/identities.hpp"

namespace qverify::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

/// Environment variable consulted when --parallelism is not given.
inline constexpr const char* kParallelismEnv = "QVERIFY_PARALLELISM";

/// Parses "a..b" (inclusive) or a single integer "a".
/// Throws std::invalid_argument on malformed or empty ranges.
ParamRange parseRange(const std::string& text);

struct Summary {
  int64_t total = 0;
  int64_t passed = 0;
  int64_t failed = 0;
  int64_t skipped = 0;
};

/// Entry point shared by the qverify binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qverify::cli
