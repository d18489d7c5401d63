#include "qverify/qcomb.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace qverify {

namespace {

const Poly kZero;
const Poly kOne(1);

class BinomCache {
 public:
  const Poly& get(int64_t m, int64_t n) {
    if (m < 0 || n < 0) return kZero;
    if (m == 0 || n == 0) return kOne;
    if (m > n) std::swap(m, n);
    const Key key{m, n};
    {
      std::shared_lock lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return *it->second;
    }
    // [m+n; m] = [m+n-1; m-1] + q^m [m+n-1; m]
    Poly value = get(m - 1, n);
    value.addShifted(get(m, n - 1), m);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, std::make_unique<const Poly>(std::move(value)));
    return *it->second;
  }

  std::size_t size() {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  using Key = std::pair<int64_t, int64_t>;
  std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<const Poly>> entries_;
};

BinomCache& cache() {
  static BinomCache instance;
  return instance;
}

}  // namespace

const Poly& qBinom(int64_t m, int64_t n) { return cache().get(m, n); }

const Poly& qBinomTopBottom(int64_t top, int64_t bottom) { return qBinom(bottom, top - bottom); }

const Poly& floorBinom(int64_t top, int64_t offset) { return qBinomTopBottom(top, floorDiv(offset, 2)); }

std::size_t qBinomCacheSize() { return cache().size(); }

Poly pochhammer(int sign, int64_t s, int64_t t, int64_t m) {
  if (m < 0) throw std::invalid_argument("pochhammer: length must be >= 0");
  Poly out(1);
  for (int64_t j = 0; j < m; ++j) out = timesOneMinus(out, s + j * t, sign);
  return out;
}

Poly doubleBinom(int64_t L, int64_t m, int64_t k) {
  const Poly& first = qBinomTopBottom(L, m);
  if (first.isZero()) return Poly();
  return first * qBinomTopBottom(L - m, k);
}

Poly trinomialTm1(int64_t k, int64_t a) {
  if (k < 0) throw std::invalid_argument("trinomialTm1: k must be >= 0");
  Poly sum;
  for (int64_t m = 0; m <= k; ++m) {
    const int64_t rest = k - m - a;
    if (rest % 2 != 0) continue;
    const Poly& inner = qBinomTopBottom(k - m, rest / 2);
    if (inner.isZero()) continue;
    sum.addShifted(qBinomTopBottom(k, m) * inner, triangular(m));
  }
  return sum;
}

}  // namespace qverify
