#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "qverify/poly.hpp"

namespace qverify {

/**
 * The three positivity-preserving kernels:
 *
 *   C_{L,k} = sum_m q^{T(m)+T(m+k)}      [L; m, k]
 *   W_{L,k} = sum_m q^{(m+k)^2+k^2}      [L; m, 2k]
 *   O_{L,k} = sum_m q^{2T(m+k)+2T(k)}    [L; m, 2k+1]
 */
enum class KernelKind { C, W, O };

std::string_view toString(KernelKind kind);
/// Accepts "C", "W", "O". Throws std::invalid_argument otherwise.
KernelKind parseKernelKind(std::string_view text);

/// Largest k with a nonzero kernel entry at L, or -1 when the row is empty.
int64_t kernelMaxK(KernelKind kind, int64_t L);

/// Row k = 0..kernelMaxK(kind, L) of a kernel.
struct KernelMatrix {
  KernelKind kind;
  int64_t L;
  std::vector<Poly> entries;
};

/// Cached per (kind, L); thread-safe.
std::shared_ptr<const KernelMatrix> kernelRow(KernelKind kind, int64_t L);

/// Single entry; zero outside the support.
Poly kernel(KernelKind kind, int64_t L, int64_t k);

using KernelInput = std::function<Poly(int64_t k)>;

/// sum_k kernel(kind, L, k) * F(k). F is only queried on the kernel support.
Poly applyTransform(KernelKind kind, int64_t L, const KernelInput& F);

struct KernelIdentitySides {
  Poly lhs;
  Poly rhs;
};

/**
 * Both sides of the kernel identity for `kind`:
 *   C: sum_k C_{L,k} [k; floor((k-a)/2)]  =  q^{T(a)}   [2L+1; L-a]
 *   W: sum_k W_{L,k} [2k; k-a]            =  q^{2a^2}   [2L; L-2a]
 *   O: sum_k O_{L,k} [2k+1; k-a]          =  q^{4T(a)}  [2L; L-2a-1]
 */
KernelIdentitySides kernelIdentitySides(KernelKind kind, int64_t L, int64_t a);
bool verifyKernelIdentity(KernelKind kind, int64_t L, int64_t a);

/// sum_k q^{T(k)} [L; k] (T_{-1}(k, a) + T_{-1}(k, a+1))  =  q^{T(a)} [2L+1; L-a]
KernelIdentitySides berkovichUncuSides(int64_t L, int64_t a);
bool verifyBerkovichUncu(int64_t L, int64_t a);

}  // namespace qverify
