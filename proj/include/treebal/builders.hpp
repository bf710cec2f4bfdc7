// Named tree families: caterpillar, fully balanced, maximally balanced and
// greedy-from-the-bottom (GFB) trees. All builders return canonical shapes.

#ifndef TREEBAL_BUILDERS_HPP_
#define TREEBAL_BUILDERS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "treebal/tree_shape.hpp"

namespace treebal {

enum class BuilderKind { kCaterpillar, kFullyBalanced, kMaximallyBalanced, kGreedyFromBottom };

// Accepts "cat", "fb", "mb", "gfb".
std::optional<BuilderKind> parse_builder_kind(std::string_view name);
std::string_view builder_name(BuilderKind kind);

// Root partition (n-1, 1) all the way down; the only shape with one cherry.
TreeShape caterpillar(std::uint32_t n);

// 2^k leaves, all at depth k. k <= 31.
TreeShape fully_balanced(std::uint32_t k);

// Splits ceil(n/2) / floor(n/2) at every node.
TreeShape maximally_balanced(std::uint32_t n);

// Starts from n single leaves and repeatedly joins the two smallest trees in
// the pool. Among trees of equal size the one that sorts first under
// shape_order is taken.
TreeShape gfb(std::uint32_t n);

// Same algorithm, but ties among equal-size trees are broken uniformly at
// random. Used to check that the canonical result does not depend on the
// tie-break.
TreeShape gfb_randomized(std::uint32_t n, std::uint64_t seed);

// Root partition (n_a, n_b) of gfb(n) in closed form, n >= 2.
std::pair<std::uint64_t, std::uint64_t> gfb_root_partition(std::uint64_t n);

// Dispatches on kind; FullyBalanced requires n to be a power of two.
TreeShape build(BuilderKind kind, std::uint32_t n);

}  // namespace treebal

#endif  // TREEBAL_BUILDERS_HPP_
