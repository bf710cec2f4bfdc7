// Unlabeled rooted binary tree shapes.
//
// A TreeShape is either a single leaf or an internal node with exactly two
// child shapes. Shapes are immutable values: children are held through
// shared pointers to const nodes, so copying a shape is cheap and subtrees
// may be shared freely between shapes and across threads.
//
// Two shapes are isomorphic if they differ only in the order of children at
// some internal nodes. canonicalize() picks one representative per
// isomorphism class: at every internal node the children are sorted
// ascending under ShapeOrder, which puts the child with more leaves first
// and breaks ties by comparing the children recursively (first child, then
// second child).

#ifndef TREEBAL_TREE_SHAPE_HPP_
#define TREEBAL_TREE_SHAPE_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace treebal {

class TreeShape {
 public:
  // The single-leaf shape.
  TreeShape();

  static TreeShape leaf() { return TreeShape(); }
  static TreeShape internal(TreeShape left, TreeShape right);

  bool is_leaf() const { return node_ == nullptr; }
  std::uint32_t leaf_count() const;

  // Only valid on internal shapes.
  const TreeShape& left() const;
  const TreeShape& right() const;

  // True if both handles point at the same node (or both are leaves).
  bool same_node(const TreeShape& other) const { return node_ == other.node_; }
  // Identity of the underlying node; nullptr for a leaf.
  const void* node_id() const { return node_.get(); }

 private:
  struct Node;

  explicit TreeShape(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TreeShape::Node {
  Node(TreeShape l, TreeShape r)
      : left(std::move(l)), right(std::move(r)),
        leaves(left.leaf_count() + right.leaf_count()) {}
  // Releases long chains without recursing once per level.
  ~Node();
  TreeShape left;
  TreeShape right;
  std::uint32_t leaves;
};

inline std::uint32_t TreeShape::leaf_count() const {
  return node_ ? node_->leaves : 1;
}
inline const TreeShape& TreeShape::left() const { return node_->left; }
inline const TreeShape& TreeShape::right() const { return node_->right; }

// Total order on shapes used for canonical child ordering. Compares leaf
// counts (more leaves sorts first), then first children, then second
// children. Only meaningful on canonical shapes when used to decide
// isomorphism.
std::strong_ordering shape_order(const TreeShape& a, const TreeShape& b);

// Preorder sequence of subtree leaf counts of the canonical form. Two shapes
// have equal keys iff they are isomorphic. Keys compare consistently with
// shape_order on canonical shapes.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint32_t> preorder_counts)
      : counts_(std::move(preorder_counts)) {}

  const std::vector<std::uint32_t>& counts() const { return counts_; }

  bool operator==(const CanonicalKey&) const = default;
  std::strong_ordering operator<=>(const CanonicalKey& other) const;

 private:
  std::vector<std::uint32_t> counts_;
};

TreeShape canonicalize(const TreeShape& shape);
bool is_canonical(const TreeShape& shape);
CanonicalKey canonical_key(const TreeShape& shape);
bool isomorphic(const TreeShape& a, const TreeShape& b);

// Counts nodes by walking the shape; ignores the cached leaf counts.
std::uint64_t count_leaves(const TreeShape& shape);
std::uint64_t count_internal_nodes(const TreeShape& shape);

// Maximal pending subtrees (T_a, T_b) at the root, ordered so that
// T_a has at least as many leaves as T_b. Only valid on internal shapes.
struct StandardDecomposition {
  TreeShape larger;
  TreeShape smaller;
};
StandardDecomposition decompose(const TreeShape& shape);

}  // namespace treebal

#endif  // TREEBAL_TREE_SHAPE_HPP_
