#include "treebal/indices.hpp"

#include <algorithm>
#include <vector>

#include "treebal/errors.hpp"

namespace treebal {

namespace {

struct Partial {
  std::uint64_t colless = 0;
  std::uint64_t sackin = 0;
  std::uint64_t height = 0;
  std::uint64_t cherries = 0;
};

// Post-order with an explicit stack; caterpillars are as deep as they are
// wide.
Partial traverse(const TreeShape& root) {
  struct Item {
    const TreeShape* shape;
    bool expanded;
  };
  std::vector<Item> todo{{&root, false}};
  std::vector<Partial> done;
  while (!todo.empty()) {
    Item item = todo.back();
    todo.pop_back();
    const TreeShape& s = *item.shape;
    if (s.is_leaf()) {
      done.push_back({});
      continue;
    }
    if (!item.expanded) {
      todo.push_back({item.shape, true});
      todo.push_back({&s.right(), false});
      todo.push_back({&s.left(), false});
      continue;
    }
    const Partial right = done.back();
    done.pop_back();
    const Partial left = done.back();
    done.pop_back();
    const std::uint64_t a = s.left().leaf_count();
    const std::uint64_t b = s.right().leaf_count();
    Partial p;
    p.colless = left.colless + right.colless + (a > b ? a - b : b - a);
    p.sackin = left.sackin + right.sackin + a + b;
    p.height = 1 + std::max(left.height, right.height);
    p.cherries = left.cherries + right.cherries +
                 (s.left().is_leaf() && s.right().is_leaf() ? 1 : 0);
    done.push_back(p);
  }
  return done.back();
}

}  // namespace

std::uint64_t colless(const TreeShape& shape) { return traverse(shape).colless; }
std::uint64_t sackin(const TreeShape& shape) { return traverse(shape).sackin; }
std::uint64_t height(const TreeShape& shape) { return traverse(shape).height; }
std::uint64_t cherries(const TreeShape& shape) {
  return traverse(shape).cherries;
}

BalanceReport report(const TreeShape& shape) {
  const Partial p = traverse(shape);
  BalanceReport r;
  r.n = shape.leaf_count();
  r.colless = p.colless;
  r.sackin = p.sackin;
  r.height = p.height;
  r.cherries = p.cherries;
  if (!shape.is_leaf()) {
    const std::uint64_t a = shape.left().leaf_count();
    const std::uint64_t b = shape.right().leaf_count();
    r.root_partition = {std::max(a, b), std::min(a, b)};
  }
  return r;
}

std::uint64_t max_colless(std::uint64_t n) {
  if (n == 0) throw InvalidInput("max_colless: n must be positive");
  if (n <= 2) return 0;
  return (n - 1) * (n - 2) / 2;
}

}  // namespace treebal
