#include "treebal/tree_shape.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace treebal {

TreeShape::TreeShape() = default;

TreeShape TreeShape::internal(TreeShape left, TreeShape right) {
  return TreeShape(std::make_shared<Node>(std::move(left), std::move(right)));
}

TreeShape::Node::~Node() {
  std::vector<std::shared_ptr<const Node>> pending;
  auto steal = [&pending](TreeShape& t) {
    if (t.node_ && t.node_.use_count() == 1) pending.push_back(std::move(t.node_));
  };
  steal(left);
  steal(right);
  while (!pending.empty()) {
    std::shared_ptr<const Node> node = std::move(pending.back());
    pending.pop_back();
    // Sole owner, and the node was not created const.
    auto& owned = const_cast<Node&>(*node);
    steal(owned.left);
    steal(owned.right);
  }
}

std::strong_ordering shape_order(const TreeShape& a, const TreeShape& b) {
  if (a.same_node(b)) return std::strong_ordering::equal;
  // More leaves sorts first.
  if (auto c = b.leaf_count() <=> a.leaf_count(); c != 0) return c;
  if (a.is_leaf()) return std::strong_ordering::equal;
  if (auto c = shape_order(a.left(), b.left()); c != 0) return c;
  return shape_order(a.right(), b.right());
}

std::strong_ordering CanonicalKey::operator<=>(const CanonicalKey& other) const {
  // Elementwise with larger counts first; matches shape_order on canonical
  // shapes because a subtree of k leaves occupies exactly 2k-1 entries.
  const auto n = std::min(counts_.size(), other.counts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = other.counts_[i] <=> counts_[i]; c != 0) return c;
  }
  return counts_.size() <=> other.counts_.size();
}

TreeShape canonicalize(const TreeShape& shape) {
  // Post-order with an explicit stack; caterpillars can be very deep.
  struct Frame {
    TreeShape node;
    bool expanded;
  };
  std::vector<Frame> todo{{shape, false}};
  std::vector<TreeShape> done;
  while (!todo.empty()) {
    Frame f = std::move(todo.back());
    todo.pop_back();
    if (f.node.is_leaf()) {
      done.push_back(std::move(f.node));
    } else if (!f.expanded) {
      todo.push_back({f.node, true});
      todo.push_back({f.node.right(), false});
      todo.push_back({f.node.left(), false});
    } else {
      TreeShape r = std::move(done.back());
      done.pop_back();
      TreeShape l = std::move(done.back());
      done.pop_back();
      if (shape_order(r, l) < 0) std::swap(l, r);
      if (l.same_node(f.node.left()) && r.same_node(f.node.right())) {
        done.push_back(std::move(f.node));
      } else {
        done.push_back(TreeShape::internal(std::move(l), std::move(r)));
      }
    }
  }
  return std::move(done.back());
}

bool is_canonical(const TreeShape& shape) {
  if (shape.is_leaf()) return true;
  return is_canonical(shape.left()) && is_canonical(shape.right()) &&
         shape_order(shape.left(), shape.right()) <= 0;
}

namespace {

void append_preorder(const TreeShape& shape, std::vector<std::uint32_t>& out) {
  out.push_back(shape.leaf_count());
  if (shape.is_leaf()) return;
  append_preorder(shape.left(), out);
  append_preorder(shape.right(), out);
}

}  // namespace

CanonicalKey canonical_key(const TreeShape& shape) {
  std::vector<std::uint32_t> counts;
  counts.reserve(2 * std::size_t{shape.leaf_count()} - 1);
  append_preorder(canonicalize(shape), counts);
  return CanonicalKey(std::move(counts));
}

bool isomorphic(const TreeShape& a, const TreeShape& b) {
  if (a.leaf_count() != b.leaf_count()) return false;
  return shape_order(canonicalize(a), canonicalize(b)) == 0;
}

std::uint64_t count_leaves(const TreeShape& shape) {
  if (shape.is_leaf()) return 1;
  return count_leaves(shape.left()) + count_leaves(shape.right());
}

std::uint64_t count_internal_nodes(const TreeShape& shape) {
  if (shape.is_leaf()) return 0;
  return 1 + count_internal_nodes(shape.left()) +
         count_internal_nodes(shape.right());
}

StandardDecomposition decompose(const TreeShape& shape) {
  if (shape.is_leaf()) {
    throw std::invalid_argument("decompose: a single leaf has no subtrees");
  }
  if (shape.left().leaf_count() >= shape.right().leaf_count()) {
    return {shape.left(), shape.right()};
  }
  return {shape.right(), shape.left()};
}

}  // namespace treebal
