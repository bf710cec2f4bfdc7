#include "treebal/counts.hpp"

#include "treebal/errors.hpp"

namespace treebal {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw InvalidInput("count: n must be positive");
  if (n > 20000) throw InvalidInput("count: n above 20000 is not supported");
}

}  // namespace

BigCount pairs_with_repetition(const BigCount& x) { return x * (x + 1) / 2; }

void CountTable::grow(std::uint64_t n) {
  for (std::uint64_t m = colless_.size(); m <= n; ++m) {
    if (m <= 2) {
      colless_.emplace_back(1);
      sackin_.emplace_back(1);
      stated_.emplace_back(1);
      bound_.emplace_back(1);
      continue;
    }
    BigCount c = 0;
    for (const auto& [a, b] : minima_.qb(m)) {
      if (a > b) c += colless_[a] * colless_[b];
    }

    const std::uint64_t limit = sackin_imbalance_bound(m);
    BigCount s = 0;
    BigCount bb = 0;
    // a - b = 2a - m <= limit.
    for (std::uint64_t a = m / 2 + 1; 2 * a <= m + limit; ++a) {
      const std::uint64_t b = m - a;
      s += sackin_[a] * sackin_[b];
      if (a % 2 == 1 && b % 2 == 1) continue;
      bb += bound_[a] * bound_[b];
    }

    const unsigned k = ceil_log2(m);
    BigCount st = 0;
    for (std::uint64_t a = m / 2 + 1; a < m; ++a) {
      const std::uint64_t b = m - a;
      if (ceil_log2(a) == k - 1 && ceil_log2(b) == k - 1) {
        st += stated_[a] * stated_[b];
      }
    }
    if (4 * m <= 3 * (std::uint64_t{1} << k)) {
      st += stated_[m - (std::uint64_t{1} << (k - 2))];
    }

    if (m % 2 == 0) {
      c += pairs_with_repetition(colless_[m / 2]);
      s += pairs_with_repetition(sackin_[m / 2]);
      bb += pairs_with_repetition(bound_[m / 2]);
      st += pairs_with_repetition(stated_[m / 2]);
    }
    colless_.push_back(std::move(c));
    sackin_.push_back(std::move(s));
    stated_.push_back(std::move(st));
    bound_.push_back(std::move(bb));
  }
}

BigCount CountTable::colless_minimal(std::uint64_t n) {
  require_positive(n);
  std::lock_guard lock(mutex_);
  grow(n);
  return colless_[n];
}

BigCount CountTable::sackin_minimal(std::uint64_t n) {
  require_positive(n);
  std::lock_guard lock(mutex_);
  grow(n);
  return sackin_[n];
}

BigCount CountTable::sackin_minimal_stated(std::uint64_t n) {
  require_positive(n);
  std::lock_guard lock(mutex_);
  grow(n);
  return stated_[n];
}

BigCount CountTable::bound_b(std::uint64_t n) {
  require_positive(n);
  std::lock_guard lock(mutex_);
  grow(n);
  return bound_[n];
}

CountTable& CountTable::shared() {
  static CountTable table;
  return table;
}

BigCount count_colless_minimal(std::uint64_t n) {
  return CountTable::shared().colless_minimal(n);
}
BigCount count_sackin_minimal(std::uint64_t n) {
  return CountTable::shared().sackin_minimal(n);
}
BigCount count_sackin_minimal_stated(std::uint64_t n) {
  return CountTable::shared().sackin_minimal_stated(n);
}
BigCount count_bound_b(std::uint64_t n) {
  return CountTable::shared().bound_b(n);
}

}  // namespace treebal
