// Balance statistics of a tree shape.

#ifndef TREEBAL_INDICES_HPP_
#define TREEBAL_INDICES_HPP_

#include <cstdint>
#include <utility>

#include "treebal/tree_shape.hpp"

namespace treebal {

struct BalanceReport {
  std::uint64_t n = 1;
  std::uint64_t colless = 0;
  std::uint64_t sackin = 0;
  std::uint64_t height = 0;
  std::uint64_t cherries = 0;
  // (n_a, n_b) with n_a >= n_b; (0, 0) for a single leaf.
  std::pair<std::uint64_t, std::uint64_t> root_partition{0, 0};

  bool operator==(const BalanceReport&) const = default;
};

// Sum over internal nodes of |leaves(left) - leaves(right)|.
std::uint64_t colless(const TreeShape& shape);

// Sum over internal nodes of the number of leaves below the node.
std::uint64_t sackin(const TreeShape& shape);

// Length of the longest root-to-leaf path, in edges.
std::uint64_t height(const TreeShape& shape);

// Internal nodes whose two children are both leaves.
std::uint64_t cherries(const TreeShape& shape);

// All statistics from one post-order traversal.
BalanceReport report(const TreeShape& shape);

// Largest Colless value over shapes with n leaves: (n-1)(n-2)/2.
std::uint64_t max_colless(std::uint64_t n);

}  // namespace treebal

#endif  // TREEBAL_INDICES_HPP_
