#include "treebal/minima.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "treebal/builders.hpp"
#include "treebal/errors.hpp"

namespace treebal {

unsigned ceil_log2(std::uint64_t n) {
  if (n == 0) throw InvalidInput("ceil_log2: n must be positive");
  return n == 1 ? 0 : static_cast<unsigned>(std::bit_width(n - 1));
}

template <typename Compute>
std::uint64_t MinimaTable::memoized(
    std::unordered_map<std::uint64_t, std::uint64_t>& memo, std::uint64_t n,
    Compute compute) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // Computed outside the lock; a racing insert stores the same value.
  const std::uint64_t value = compute();
  std::unique_lock lock(mutex_);
  memo.emplace(n, value);
  return value;
}

std::uint64_t MinimaTable::min_colless(std::uint64_t n) {
  if (n == 0) throw InvalidInput("min_colless: n must be positive");
  if (n <= 2) return 0;
  return memoized(colless_, n, [this, n] {
    const std::uint64_t m = n / 2;
    if (n % 2 == 0) return 2 * min_colless(m);
    return min_colless(m + 1) + min_colless(m) + 1;
  });
}

std::uint64_t MinimaTable::min_sackin(std::uint64_t n) {
  if (n == 0) throw InvalidInput("min_sackin: n must be positive");
  if (n == 1) return 0;
  return memoized(sackin_, n, [this, n] {
    return n + min_sackin(n - n / 2) + min_sackin(n / 2);
  });
}

std::vector<Partition> MinimaTable::qb(std::uint64_t n) {
  if (n < 2) throw InvalidInput("qb: n must be at least 2");
  const std::uint64_t target = min_colless(n);
  std::vector<Partition> out;
  for (std::uint64_t a = n - 1; 2 * a >= n; --a) {
    const std::uint64_t b = n - a;
    if (min_colless(a) + min_colless(b) + (a - b) == target) out.emplace_back(a, b);
  }
  return out;
}

MinimaTable& MinimaTable::shared() {
  static MinimaTable table;
  return table;
}

std::uint64_t min_colless_recursive(std::uint64_t n) {
  return MinimaTable::shared().min_colless(n);
}

std::uint64_t min_colless_explicit(std::uint64_t n) {
  const unsigned k = ceil_log2(n);
  std::uint64_t total = 0;
  for (unsigned m = 1; m + 1 <= k; ++m) {
    const std::uint64_t period = std::uint64_t{1} << m;
    const std::uint64_t r = n & (period - 1);
    total += std::min(r, period - r);
  }
  return total;
}

DyadicRational fi_term(std::uint64_t n, unsigned i, unsigned k) {
  const int shift = static_cast<int>(i) - static_cast<int>(k) + 1;
  const DyadicRational x =
      DyadicRational(static_cast<std::int64_t>(n)).scaled(shift);
  return nearest_int_distance(x).scaled(-shift);
}

DyadicRational fi_term(std::uint64_t n, unsigned i) {
  return fi_term(n, i, ceil_log2(n));
}

std::uint64_t max_min_bound(std::uint64_t n) {
  if (n < 2) throw InvalidInput("max_min_bound: n must be at least 2");
  return std::uint64_t{1} << (ceil_log2(n) - 1);
}

bool cn_properties_check(unsigned k) {
  if (k < 2 || k > 40) throw InvalidInput("cn_properties_check: k must be in 2..40");
  const std::uint64_t full = std::uint64_t{1} << k;
  const std::uint64_t half = full / 2;
  if (min_colless_explicit(full + 1) != k) return false;
  if (min_colless_explicit(full - 1) != k - 1) return false;
  for (std::uint64_t j = 1; j < half; ++j) {
    if (min_colless_explicit(half + j) != min_colless_explicit(full - j)) {
      return false;
    }
  }
  return true;
}

bool fi_identity_check(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw InvalidInput("fi_identity_check: n must be odd and at least 3");
  }
  const unsigned k = ceil_log2(n);
  const std::uint64_t half = std::uint64_t{1} << (k - 1);
  if (!(n - 1 > half)) {
    throw InvalidInput("fi_identity_check: requires n - 1 > 2^(k_n - 1), got n = " +
                       std::to_string(n));
  }
  for (unsigned i = 0; i + 3 <= k; ++i) {
    const DyadicRational lhs = fi_term(n + 1, i, k) + fi_term(n - 1, i, k);
    const DyadicRational rhs = fi_term(n, i, k) + fi_term(n, i, k);
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<Partition> qb_set(std::uint64_t n) { return MinimaTable::shared().qb(n); }

bool partition_necessary_ok(std::uint64_t n, std::uint64_t n_a,
                            std::uint64_t n_b) {
  if (n_a + n_b != n || n_a < n_b || n_b < 1) {
    throw InvalidInput("partition_necessary_ok: need n_a + n_b = n and n_a >= n_b >= 1");
  }
  const std::uint64_t gfb_b = gfb_root_partition(n).second;
  if (n_b < gfb_b || n_b > n / 2) return false;
  if (n_a != n_b && n_a % 2 == 1 && n_b % 2 == 1) return false;
  return true;
}

std::uint64_t min_sackin_value(std::uint64_t n) {
  return MinimaTable::shared().min_sackin(n);
}

std::uint64_t max_root_imbalance(std::uint64_t n) {
  const auto [a, b] = gfb_root_partition(n);
  return a - b;
}

std::uint64_t sackin_imbalance_bound(std::uint64_t n) {
  if (n <= 2) return 0;
  const unsigned k = ceil_log2(n);
  const std::uint64_t full = std::uint64_t{1} << k;
  return std::min(n - full / 2, full - n);
}

}  // namespace treebal
