#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qverify/poly.hpp"
#include "qverify/report.hpp"
#include "qverify/theta.hpp"

namespace qverify {

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(std::string_view id)
      : std::invalid_argument("unknown identity '" + std::string(id) + "'") {}
};

class MissingParam : public std::invalid_argument {
 public:
  MissingParam(std::string_view id, std::string_view param)
      : std::invalid_argument("identity '" + std::string(id) + "' requires parameter '" + std::string(param) + "'") {}
};

/// Parameters of the finite Andrews-Gordon (Foda-Quano) multi-sum.
/// N_j = n_j + ... + n_nu and E_{i,s} = max(i + s - nu, 0).
struct FodaQuanoParams {
  int64_t nu = 1;
  int64_t s = 0;
  int64_t L = 0;
};

/**
 * sum_{n_2..n_nu >= 0} q^{N_2^2+...+N_nu^2 + N_{nu+1-s}+...+N_nu}
 *     prod_{i=2}^{nu} [n_i + L - 2(N_2+...+N_i) - E_{i,s}; n_i]_q
 *
 * Enumerated over chains N_2 >= ... >= N_nu >= 0; a branch is cut as soon as
 * a binomial's lower slack L - 2(N_2+...+N_i) - E_{i,s} goes negative.
 */
Poly fodaQuanoLhs(const FodaQuanoParams& p);

/// sum_j (-1)^j q^{((2nu+1)j^2 + (1+2s)j)/2} [L; floor((L-(2nu+1)j-s)/2)]
Poly fodaQuanoRhs(const FodaQuanoParams& p);

/// sum_k C_{L,k} * fodaQuanoLhs(nu, s, k)
Poly theorem1Lhs(const FodaQuanoParams& p);

/// q^{T(s)} sum_j (-1)^j q^{(nu+1)(2nu+1)j^2 + (nu+1)(2s+1)j} [2L+1; L-s-(2nu+1)j]
Poly theorem1Rhs(const FodaQuanoParams& p);

/// Inclusive integer range a..b.
struct ParamRange {
  int64_t lo = 0;
  int64_t hi = 0;
};

struct IdentityDescriptor {
  std::string id;
  /// Equation label the identity is filed under, e.g. "(3.4)".
  std::string anchor;
  std::string description;
  std::vector<std::string> params;
  /// Grid used by verify-all.
  std::map<std::string, ParamRange> defaultRanges;
  /// Whether the identity also asserts coefficient nonnegativity.
  bool positivity = false;
  /// Extra constraints on a parameter set (e.g. s < nu). Cells failing this are skipped.
  std::function<bool(const ParamMap&)> admissible;
};

/// All finite identities, sorted by id.
const std::vector<IdentityDescriptor>& registryList();

/// Throws UnknownIdentity.
const IdentityDescriptor& registryLookup(std::string_view id);

bool isRegistered(std::string_view id);

/// Builds both sides exactly, compares them and, for positivity entries,
/// scans for negative coefficients. Throws UnknownIdentity, MissingParam,
/// or std::invalid_argument for inadmissible parameters.
IdentityReport verify(std::string_view id, const ParamMap& params);

/// Theta-sum specs for the alternating sums used by the registry, by id.
/// Throws UnknownIdentity for ids without a single theta-sum side.
ThetaSumSpec thetaSpecFor(std::string_view id);

}  // namespace qverify
