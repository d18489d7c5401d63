#include "qverify/transforms.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "qverify/qcomb.hpp"

namespace qverify {

std::string_view toString(KernelKind kind) {
  switch (kind) {
    case KernelKind::C:
      return "C";
    case KernelKind::W:
      return "W";
    case KernelKind::O:
      return "O";
  }
  return "?";
}

KernelKind parseKernelKind(std::string_view text) {
  if (text == "C") return KernelKind::C;
  if (text == "W") return KernelKind::W;
  if (text == "O") return KernelKind::O;
  throw std::invalid_argument("unknown kernel kind '" + std::string(text) + "' (expected C, W or O)");
}

int64_t kernelMaxK(KernelKind kind, int64_t L) {
  if (L < 0) return -1;
  switch (kind) {
    case KernelKind::C:
      return L;
    case KernelKind::W:
      return L / 2;
    case KernelKind::O:
      return L >= 1 ? (L - 1) / 2 : -1;
  }
  return -1;
}

namespace {

// Uses [L; m, j] = [L; j] [L-j; m] so each entry costs one multiplication.
Poly computeEntry(KernelKind kind, int64_t L, int64_t k) {
  const int64_t width = kind == KernelKind::C ? k : (kind == KernelKind::W ? 2 * k : 2 * k + 1);
  const Poly& outer = qBinomTopBottom(L, width);
  if (outer.isZero()) return Poly();
  Poly inner;
  for (int64_t m = 0; m <= L - width; ++m) {
    int64_t e = 0;
    switch (kind) {
      case KernelKind::C:
        e = triangular(m) + triangular(m + k);
        break;
      case KernelKind::W:
        e = (m + k) * (m + k) + k * k;
        break;
      case KernelKind::O:
        e = 2 * triangular(m + k) + 2 * triangular(k);
        break;
    }
    inner.addShifted(qBinomTopBottom(L - width, m), e);
  }
  return outer * inner;
}

class RowCache {
 public:
  std::shared_ptr<const KernelMatrix> get(KernelKind kind, int64_t L) {
    const auto key = std::make_pair(static_cast<int>(kind), L);
    {
      std::lock_guard lock(mutex_);
      auto it = rows_.find(key);
      if (it != rows_.end()) return it->second;
    }
    auto row = std::make_shared<KernelMatrix>();
    row->kind = kind;
    row->L = L;
    for (int64_t k = 0; k <= kernelMaxK(kind, L); ++k) row->entries.push_back(computeEntry(kind, L, k));
    std::lock_guard lock(mutex_);
    return rows_.try_emplace(key, std::move(row)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int64_t>, std::shared_ptr<const KernelMatrix>> rows_;
};

RowCache& rowCache() {
  static RowCache instance;
  return instance;
}

}  // namespace

std::shared_ptr<const KernelMatrix> kernelRow(KernelKind kind, int64_t L) {
  if (L < 0) throw std::invalid_argument("kernelRow: L must be >= 0");
  return rowCache().get(kind, L);
}

Poly kernel(KernelKind kind, int64_t L, int64_t k) {
  if (L < 0) throw std::invalid_argument("kernel: L must be >= 0");
  if (k < 0 || k > kernelMaxK(kind, L)) return Poly();
  return kernelRow(kind, L)->entries[static_cast<std::size_t>(k)];
}

Poly applyTransform(KernelKind kind, int64_t L, const KernelInput& F) {
  const auto row = kernelRow(kind, L);
  Poly sum;
  for (std::size_t k = 0; k < row->entries.size(); ++k) {
    const Poly value = F(static_cast<int64_t>(k));
    if (value.isZero()) continue;
    sum += row->entries[k] * value;
  }
  return sum;
}

KernelIdentitySides kernelIdentitySides(KernelKind kind, int64_t L, int64_t a) {
  switch (kind) {
    case KernelKind::C:
      return {applyTransform(kind, L, [a](int64_t k) { return floorBinom(k, k - a); }),
              monomialShift(qBinomTopBottom(2 * L + 1, L - a), triangular(a))};
    case KernelKind::W:
      return {applyTransform(kind, L, [a](int64_t k) { return qBinomTopBottom(2 * k, k - a); }),
              monomialShift(qBinomTopBottom(2 * L, L - 2 * a), 2 * a * a)};
    case KernelKind::O:
      return {applyTransform(kind, L, [a](int64_t k) { return qBinomTopBottom(2 * k + 1, k - a); }),
              monomialShift(qBinomTopBottom(2 * L, L - 2 * a - 1), 4 * triangular(a))};
  }
  throw std::logic_error("unreachable");
}

bool verifyKernelIdentity(KernelKind kind, int64_t L, int64_t a) {
  const auto sides = kernelIdentitySides(kind, L, a);
  return sides.lhs == sides.rhs;
}

KernelIdentitySides berkovichUncuSides(int64_t L, int64_t a) {
  if (L < 0) throw std::invalid_argument("berkovichUncu: L must be >= 0");
  Poly lhs;
  for (int64_t k = 0; k <= L; ++k) {
    Poly trinomials = trinomialTm1(k, a) + trinomialTm1(k, a + 1);
    if (trinomials.isZero()) continue;
    lhs.addShifted(qBinomTopBottom(L, k) * trinomials, triangular(k));
  }
  return {std::move(lhs), monomialShift(qBinomTopBottom(2 * L + 1, L - a), triangular(a))};
}

bool verifyBerkovichUncu(int64_t L, int64_t a) {
  const auto sides = berkovichUncuSides(L, a);
  return sides.lhs == sides.rhs;
}

}  // namespace qverify
