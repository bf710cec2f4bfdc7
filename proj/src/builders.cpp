#include "treebal/builders.hpp"

#include <bit>
#include <map>
#include <random>
#include <unordered_map>
#include <vector>

#include "treebal/errors.hpp"
#include "treebal/minima.hpp"

namespace treebal {

namespace {

TreeShape join_canonical(TreeShape a, TreeShape b) {
  if (shape_order(b, a) < 0) std::swap(a, b);
  return TreeShape::internal(std::move(a), std::move(b));
}

void require_positive(std::uint32_t n, const char* who) {
  if (n == 0) throw InvalidInput(std::string(who) + ": n must be positive");
}

// Pool ordering for the greedy merge: fewer leaves first, then shape_order.
struct PoolLess {
  bool operator()(const TreeShape& a, const TreeShape& b) const {
    if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count();
    return shape_order(a, b) < 0;
  }
};

// Hash-consing so that structurally equal trees produced during one run
// share a node and compare in O(1).
class Interner {
 public:
  TreeShape join(const TreeShape& a, const TreeShape& b) {
    TreeShape joined = join_canonical(a, b);
    const auto key = std::make_pair(joined.left().node_id(),
                                    joined.right().node_id());
    auto [it, inserted] = nodes_.try_emplace(key, joined);
    return it->second;
  }

 private:
  std::map<std::pair<const void*, const void*>, TreeShape> nodes_;
};

}  // namespace

std::optional<BuilderKind> parse_builder_kind(std::string_view name) {
  if (name == "cat") return BuilderKind::kCaterpillar;
  if (name == "fb") return BuilderKind::kFullyBalanced;
  if (name == "mb") return BuilderKind::kMaximallyBalanced;
  if (name == "gfb") return BuilderKind::kGreedyFromBottom;
  return std::nullopt;
}

std::string_view builder_name(BuilderKind kind) {
  switch (kind) {
    case BuilderKind::kCaterpillar: return "cat";
    case BuilderKind::kFullyBalanced: return "fb";
    case BuilderKind::kMaximallyBalanced: return "mb";
    case BuilderKind::kGreedyFromBottom: return "gfb";
  }
  return "?";
}

TreeShape caterpillar(std::uint32_t n) {
  require_positive(n, "caterpillar");
  TreeShape shape;
  for (std::uint32_t i = 1; i < n; ++i) {
    shape = TreeShape::internal(std::move(shape), TreeShape::leaf());
  }
  return shape;
}

TreeShape fully_balanced(std::uint32_t k) {
  if (k > 31) throw InvalidInput("fully_balanced: height must be at most 31");
  TreeShape shape;
  for (std::uint32_t i = 0; i < k; ++i) shape = TreeShape::internal(shape, shape);
  return shape;
}

TreeShape maximally_balanced(std::uint32_t n) {
  require_positive(n, "maximally_balanced");
  // At each depth only two consecutive sizes occur, so memoizing by size
  // keeps the construction logarithmic and the result shares subtrees.
  std::unordered_map<std::uint32_t, TreeShape> memo;
  auto build = [&memo](auto&& self, std::uint32_t m) -> TreeShape {
    if (m == 1) return TreeShape::leaf();
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    const std::uint32_t lo = m / 2;
    TreeShape shape = TreeShape::internal(self(self, m - lo), self(self, lo));
    memo.emplace(m, shape);
    return shape;
  };
  return build(build, n);
}

TreeShape gfb(std::uint32_t n) {
  require_positive(n, "gfb");
  // The pool is a multiset stored as distinct shape -> multiplicity. While
  // the smallest entry has multiplicity >= 2, its copies are paired off: every
  // product is twice as large, so none of them can become the minimum before
  // the remaining copies are consumed.
  Interner interner;
  std::map<TreeShape, std::uint64_t, PoolLess> pool;
  pool.emplace(TreeShape::leaf(), n);
  std::uint64_t trees = n;
  while (trees > 1) {
    auto first = pool.begin();
    if (first->second >= 2) {
      TreeShape u = first->first;
      const std::uint64_t pairs = first->second / 2;
      first->second -= 2 * pairs;
      if (first->second == 0) pool.erase(first);
      pool[interner.join(u, u)] += pairs;
      trees -= pairs;
      continue;
    }
    TreeShape u = first->first;
    pool.erase(first);
    auto second = pool.begin();
    TreeShape v = second->first;
    if (--second->second == 0) pool.erase(second);
    pool[interner.join(u, v)] += 1;
    trees -= 1;
  }
  return pool.begin()->first;
}

TreeShape gfb_randomized(std::uint32_t n, std::uint64_t seed) {
  require_positive(n, "gfb_randomized");
  std::mt19937_64 rng(seed);
  std::vector<TreeShape> pool(n, TreeShape::leaf());
  auto take_min = [&]() {
    std::uint32_t smallest = UINT32_MAX;
    for (const auto& t : pool) smallest = std::min(smallest, t.leaf_count());
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i].leaf_count() == smallest) candidates.push_back(i);
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const std::size_t i = candidates[pick(rng)];
    TreeShape t = pool[i];
    pool[i] = pool.back();
    pool.pop_back();
    return t;
  };
  while (pool.size() > 1) {
    TreeShape u = take_min();
    TreeShape v = take_min();
    pool.push_back(join_canonical(std::move(u), std::move(v)));
  }
  return pool.front();
}

std::pair<std::uint64_t, std::uint64_t> gfb_root_partition(std::uint64_t n) {
  if (n < 2) throw InvalidInput("gfb_root_partition: n must be at least 2");
  const unsigned k = ceil_log2(n);
  const std::uint64_t half = std::uint64_t{1} << (k - 1);
  // Compare n with 3 * 2^(k-2) as 4n vs 3 * 2^k so that k = 1 needs no
  // fractional powers.
  const std::uint64_t four_n = 4 * n;
  const std::uint64_t three_full = 3 * (std::uint64_t{1} << k);
  if (four_n < three_full) return {n - half / 2, half / 2};
  if (four_n == three_full) return {half, half / 2};
  return {half, n - half};
}

TreeShape build(BuilderKind kind, std::uint32_t n) {
  switch (kind) {
    case BuilderKind::kCaterpillar: return caterpillar(n);
    case BuilderKind::kMaximallyBalanced: return maximally_balanced(n);
    case BuilderKind::kGreedyFromBottom: return gfb(n);
    case BuilderKind::kFullyBalanced:
      if (n == 0 || !std::has_single_bit(n)) {
        throw InvalidInput("fully balanced tree needs a power-of-two leaf count, got " +
                           std::to_string(n));
      }
      return fully_balanced(static_cast<std::uint32_t>(std::countr_zero(n)));
  }
  throw InvalidInput("unknown builder");
}

}  // namespace treebal
