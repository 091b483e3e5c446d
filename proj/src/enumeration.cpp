#include "simplexquant/enumeration.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace simplexquant {

namespace {

struct BinomialCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, BigInt> entries;
};

BinomialCache& cache() {
  static BinomialCache instance;
  return instance;
}

BigInt compute_binomial(std::int64_t n, std::int64_t k) {
  // k is small in every caller (k <= m <= alphabet size), so the
  // multiplicative form is cheap and exact.
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  const std::uint64_t key =
      (static_cast<std::uint64_t>(n) << 16) | static_cast<std::uint64_t>(k);
  if (n < (std::int64_t{1} << 47) && k < (1 << 16)) {
    auto& c = cache();
    {
      std::shared_lock lock(c.mutex);
      auto it = c.entries.find(key);
      if (it != c.entries.end()) return it->second;
    }
    BigInt value = compute_binomial(n, k);
    std::unique_lock lock(c.mutex);
    return c.entries.emplace(key, std::move(value)).first->second;
  }
  return compute_binomial(n, k);
}

BigInt count_types(int m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (n < 0) throw std::invalid_argument("need n >= 0");
  return binomial(n + m - 1, m - 1);
}

BigInt count_dual_points(int m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  if (n < 1) throw std::invalid_argument("need n >= 1");
  BigInt total = count_types(m, n);
  // Coset i contributes one point per base with counts k_j >= 1 for the
  // m-i trailing coordinates: C(n - (m-i) + m - 1, m-1) = C(n+i-1, m-1).
  for (int i = 1; i < m; ++i) {
    total += binomial(n + i - 1, m - 1);
  }
  return total;
}

TypeIndex rank(const TypePoint& point) {
  const int m = point.m();
  std::int64_t remaining = point.n;
  BigInt result = 0;
  for (int j = 0; j < m - 1; ++j) {
    const std::int64_t k = point.counts[j];
    const std::int64_t d = m - 1 - j;  // free slots after position j
    if (k > 0) {
      // Types sharing the prefix with a smaller digit at j:
      // sum_{c < k} C((remaining - c) + d - 1, d - 1), telescoped by the
      // hockey-stick identity.
      result += binomial(remaining + d, d) - binomial(remaining - k + d, d);
    }
    remaining -= k;
  }
  return result;
}

TypePoint unrank(const TypeIndex& index, int m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (index < 0 || index >= count_types(m, n)) {
    throw std::out_of_range("index out of range");
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  BigInt residual = index;
  std::int64_t remaining = n;
  for (int j = 0; j < m - 1; ++j) {
    const std::int64_t d = m - 1 - j;
    const BigInt total = binomial(remaining + d, d);
    // smaller(c) = number of types with digit < c at this position; find
    // the largest digit whose smaller-count does not exceed the residual.
    auto smaller = [&](std::int64_t c) {
      return total - binomial(remaining - c + d, d);
    };
    std::int64_t lo = 0, hi = remaining;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (smaller(mid) <= residual) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    counts[j] = lo;
    residual -= smaller(lo);
    remaining -= lo;
  }
  counts[m - 1] = remaining;
  return TypePoint(std::move(counts), n);
}

int code_rate(int m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  if (n < 1) throw std::invalid_argument("need n >= 1");
  const BigInt count = count_types(m, n);
  if (count <= 1) return 0;
  const BigInt top = count - 1;
  return static_cast<int>(boost::multiprecision::msb(top)) + 1;
}

double log2_big(const BigInt& value) {
  if (value <= 0) throw std::invalid_argument("log2 of non-positive value");
  const unsigned bits = boost::multiprecision::msb(value);
  if (bits <= 52) {
    return std::log2(value.convert_to<double>());
  }
  const unsigned shift = bits - 52;
  const BigInt top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double code_rate_exact(int m, std::int64_t n) {
  return log2_big(count_types(m, n));
}

std::int64_t max_n_for_rate(int m, int budget_bits) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  if (budget_bits < code_rate(m, 1)) {
    throw std::invalid_argument("rate budget too small to represent Q_1");
  }
  const BigInt limit = BigInt(1) << budget_bits;
  auto fits = [&](std::int64_t n) { return count_types(m, n) <= limit; };
  std::int64_t lo = 1, hi = 2;
  while (fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  // invariant: fits(lo) && !fits(hi)
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace simplexquant
