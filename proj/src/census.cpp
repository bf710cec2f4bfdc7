#include "treebal/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "treebal/errors.hpp"
#include "treebal/indices.hpp"

namespace treebal {

std::uint32_t enumeration_limit() {
  if (const char* env = std::getenv("TREEBAL_ENUM_LIMIT")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 64) {
      return static_cast<std::uint32_t>(v);
    }
  }
  return kDefaultEnumerationLimit;
}

namespace {

void check_limit(std::uint32_t n, std::uint32_t limit) {
  if (n == 0) throw InvalidInput("enumeration: n must be positive");
  if (n > limit) {
    throw SizeLimitError("enumeration of n = " + std::to_string(n) +
                         " leaves exceeds the limit of " + std::to_string(limit) +
                         " (raise it with TREEBAL_ENUM_LIMIT or --limit)");
  }
}

}  // namespace

ShapeCatalog::ShapeCatalog(std::uint32_t max_leaves)
    : max_leaves_(max_leaves), lists_(max_leaves + 1) {
  if (max_leaves >= 1) lists_[1].push_back({0, 0, 0});
  for (std::uint32_t m = 2; m <= max_leaves; ++m) {
    auto& out = lists_[m];
    for (std::uint32_t a = m - 1; 2 * a >= m; --a) {
      const std::uint32_t b = m - a;
      const auto na = static_cast<std::uint32_t>(lists_[a].size());
      const auto nb = static_cast<std::uint32_t>(lists_[b].size());
      for (std::uint32_t i = 0; i < na; ++i) {
        for (std::uint32_t j = (a == b ? i : 0); j < nb; ++j) {
          out.push_back({i, j, a});
        }
      }
    }
  }
}

std::size_t ShapeCatalog::count(std::uint32_t m) const {
  return m <= max_leaves_ ? lists_[m].size() : 0;
}

TreeShape ShapeCatalog::materialize(std::uint32_t m, std::size_t index) const {
  if (m == 1) return TreeShape::leaf();
  const Entry& e = lists_[m][index];
  return TreeShape::internal(materialize(e.first_size, e.first),
                             materialize(m - e.first_size, e.second));
}

void for_each_shape(std::uint32_t n,
                    const std::function<void(const TreeShape&)>& visit,
                    std::uint32_t limit) {
  check_limit(n, limit);
  if (n == 1) {
    visit(TreeShape::leaf());
    return;
  }
  const ShapeCatalog catalog(n - 1);
  for (std::uint32_t a = n - 1; 2 * a >= n; --a) {
    const std::uint32_t b = n - a;
    for (std::size_t i = 0; i < catalog.count(a); ++i) {
      const TreeShape first = catalog.materialize(a, i);
      for (std::size_t j = (a == b ? i : 0); j < catalog.count(b); ++j) {
        visit(TreeShape::internal(first, catalog.materialize(b, j)));
      }
    }
  }
}

std::vector<TreeShape> enumerate_shapes(std::uint32_t n, std::uint32_t limit) {
  std::vector<TreeShape> out;
  for_each_shape(n, [&out](const TreeShape& s) { out.push_back(s); }, limit);
  return out;
}

BigCount wedderburn_etherington(std::uint64_t n) {
  if (n == 0) throw InvalidInput("wedderburn_etherington: n must be positive");
  std::vector<BigCount> w(n + 1);
  w[1] = 1;
  for (std::uint64_t m = 2; m <= n; ++m) {
    BigCount total = 0;
    for (std::uint64_t a = m - 1; 2 * a > m; --a) total += w[a] * w[m - a];
    if (m % 2 == 0) total += pairs_with_repetition(w[m / 2]);
    w[m] = total;
  }
  return w[n];
}

bool is_sackin_minimal(const TreeShape& shape) {
  const std::uint64_t n = shape.leaf_count();
  if (n <= 2) return true;
  const auto [big, small] = decompose(shape);
  if (big.leaf_count() - small.leaf_count() > sackin_imbalance_bound(n)) {
    return false;
  }
  return is_sackin_minimal(big) && is_sackin_minimal(small);
}

bool is_colless_minimal(const TreeShape& shape) {
  return colless(shape) == min_colless_recursive(shape.leaf_count());
}

namespace {

// Per-shape statistics for every catalog entry, indexed like the catalog.
struct SubtreeStats {
  std::vector<std::vector<std::uint32_t>> colless;
  std::vector<std::vector<std::uint32_t>> sackin;
  std::vector<std::vector<std::uint8_t>> sackin_pred;
};

SubtreeStats compute_stats(const ShapeCatalog& catalog) {
  const std::uint32_t top = catalog.max_leaves();
  SubtreeStats st;
  st.colless.resize(top + 1);
  st.sackin.resize(top + 1);
  st.sackin_pred.resize(top + 1);
  if (top >= 1) {
    st.colless[1] = {0};
    st.sackin[1] = {0};
    st.sackin_pred[1] = {1};
  }
  for (std::uint32_t m = 2; m <= top; ++m) {
    const std::size_t count = catalog.count(m);
    st.colless[m].resize(count);
    st.sackin[m].resize(count);
    st.sackin_pred[m].resize(count);
    const std::uint64_t bound = sackin_imbalance_bound(m);
    for (std::size_t idx = 0; idx < count; ++idx) {
      const auto& e = catalog.entry(m, idx);
      const std::uint32_t a = e.first_size;
      const std::uint32_t b = m - a;
      st.colless[m][idx] = st.colless[a][e.first] + st.colless[b][e.second] + (a - b);
      st.sackin[m][idx] = st.sackin[a][e.first] + st.sackin[b][e.second] + m;
      st.sackin_pred[m][idx] =
          m <= 2 || (a - b <= bound && st.sackin_pred[a][e.first] &&
                     st.sackin_pred[b][e.second]);
    }
  }
  return st;
}

struct Tally {
  std::uint64_t value = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 0;
  std::vector<TreeShape> shapes;

  // Returns true if candidate is at or below the current minimum.
  bool offer(std::uint64_t v) {
    if (v < value) {
      value = v;
      count = 0;
      shapes.clear();
    }
    if (v == value) {
      ++count;
      return true;
    }
    return false;
  }

  void merge(Tally&& other) {
    if (other.count == 0) return;
    if (other.value < value) {
      *this = std::move(other);
      return;
    }
    if (other.value == value) {
      count += other.count;
      shapes.insert(shapes.end(), std::make_move_iterator(other.shapes.begin()),
                    std::make_move_iterator(other.shapes.end()));
    }
  }
};

struct Partial {
  std::uint64_t total = 0;
  Tally colless;
  Tally sackin;
  std::uint64_t max_sackin_of_colless_min = 0;
  std::uint64_t colless_pred = 0;
  std::uint64_t sackin_pred = 0;
  std::uint64_t max_sackin_pred = 0;
  std::set<Partition> colless_parts;
  std::set<Partition> sackin_parts;
  std::uint64_t colless_not_sackin = 0;
  std::uint64_t colless_odd_odd = 0;
  std::uint64_t sackin_odd_odd = 0;
  std::uint64_t beyond_gfb = 0;

  void merge(Partial&& o) {
    total += o.total;
    const std::uint64_t before = colless.value;
    const std::uint64_t other_min = o.colless.count ? o.colless.value : before;
    if (other_min < before) {
      max_sackin_of_colless_min = o.max_sackin_of_colless_min;
    } else if (other_min == before && o.colless.count) {
      max_sackin_of_colless_min =
          std::max(max_sackin_of_colless_min, o.max_sackin_of_colless_min);
    }
    colless.merge(std::move(o.colless));
    sackin.merge(std::move(o.sackin));
    colless_pred += o.colless_pred;
    sackin_pred += o.sackin_pred;
    max_sackin_pred = std::max(max_sackin_pred, o.max_sackin_pred);
    colless_parts.merge(o.colless_parts);
    sackin_parts.merge(o.sackin_parts);
    colless_not_sackin += o.colless_not_sackin;
    colless_odd_odd += o.colless_odd_odd;
    sackin_odd_odd += o.sackin_odd_odd;
    beyond_gfb += o.beyond_gfb;
  }
};

Partial scan_partition(const ShapeCatalog& catalog, const SubtreeStats& st,
                       std::uint32_t n, std::uint32_t a, bool keep) {
  const std::uint32_t b = n - a;
  const std::uint64_t c_n = min_colless_recursive(n);
  const std::uint64_t sackin_bound = sackin_imbalance_bound(n);
  const std::uint64_t gfb_bound = max_root_imbalance(n);
  const bool odd_odd = a != b && a % 2 == 1 && b % 2 == 1;
  const Partition part{a, b};
  Partial p;
  for (std::size_t i = 0; i < catalog.count(a); ++i) {
    for (std::size_t j = (a == b ? i : 0); j < catalog.count(b); ++j) {
      ++p.total;
      const std::uint64_t col = st.colless[a][i] + st.colless[b][j] + (a - b);
      const std::uint64_t sak = std::uint64_t{st.sackin[a][i]} + st.sackin[b][j] + n;
      const bool sackin_pred = (a - b <= sackin_bound) && st.sackin_pred[a][i] &&
                               st.sackin_pred[b][j];
      const bool colless_pred = col == c_n;

      const std::uint64_t prev_colless_min = p.colless.value;
      if (p.colless.offer(col)) {
        if (col < prev_colless_min) p.max_sackin_of_colless_min = 0;
        p.max_sackin_of_colless_min = std::max(p.max_sackin_of_colless_min, sak);
        if (keep) {
          p.colless.shapes.push_back(TreeShape::internal(catalog.materialize(a, i),
                                                         catalog.materialize(b, j)));
        }
      }
      if (p.sackin.offer(sak) && keep) {
        p.sackin.shapes.push_back(TreeShape::internal(catalog.materialize(a, i),
                                                      catalog.materialize(b, j)));
      }
      if (sackin_pred) {
        ++p.sackin_pred;
        p.max_sackin_pred = std::max(p.max_sackin_pred, sak);
        p.sackin_parts.insert(part);
        if (odd_odd) ++p.sackin_odd_odd;
      }
      if (colless_pred) {
        ++p.colless_pred;
        p.colless_parts.insert(part);
        if (!sackin_pred) ++p.colless_not_sackin;
        if (odd_odd) ++p.colless_odd_odd;
        if (a - b > gfb_bound) ++p.beyond_gfb;
      }
    }
  }
  return p;
}

}  // namespace

CensusResult census(std::uint32_t n, bool keep_representatives,
                    std::uint32_t limit, unsigned threads) {
  check_limit(n, limit);
  CensusResult r;
  r.n = n;
  if (n == 1) {
    r.total_shapes = 1;
    r.colless_min_count = r.sackin_min_count = 1;
    r.colless_predicate_count = r.sackin_predicate_count = 1;
    if (keep_representatives) {
      r.colless_min_shapes = {TreeShape::leaf()};
      r.sackin_min_shapes = {TreeShape::leaf()};
    }
    return r;
  }

  const ShapeCatalog catalog(n - 1);
  const SubtreeStats stats = compute_stats(catalog);

  std::vector<std::uint32_t> firsts;
  for (std::uint32_t a = n - 1; 2 * a >= n; --a) firsts.push_back(a);
  std::vector<Partial> partials(firsts.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(firsts.size()));
  // Warm the shared c_n memo before fanning out.
  min_colless_recursive(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < firsts.size(); t = next++) {
      partials[t] = scan_partition(catalog, stats, n, firsts[t], keep_representatives);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Partial total;
  for (auto& p : partials) total.merge(std::move(p));

  r.total_shapes = total.total;
  r.colless_min_value = total.colless.value;
  r.colless_min_count = total.colless.count;
  r.sackin_min_value = total.sackin.value;
  r.sackin_min_count = total.sackin.count;
  r.max_sackin_of_colless_min = total.max_sackin_of_colless_min;
  r.colless_predicate_count = total.colless_pred;
  r.sackin_predicate_count = total.sackin_pred;
  r.max_sackin_of_sackin_predicate = total.max_sackin_pred;
  r.colless_min_partitions = std::move(total.colless_parts);
  r.sackin_min_partitions = std::move(total.sackin_parts);
  r.colless_not_sackin = total.colless_not_sackin;
  r.colless_min_odd_odd = total.colless_odd_odd;
  r.sackin_min_odd_odd = total.sackin_odd_odd;
  r.colless_min_beyond_gfb = total.beyond_gfb;
  r.colless_min_shapes = std::move(total.colless.shapes);
  r.sackin_min_shapes = std::move(total.sackin.shapes);
  return r;
}

}  // namespace treebal
