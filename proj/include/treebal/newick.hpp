// Newick text I/O for unlabeled binary shapes.
//
// Input grammar (whitespace between tokens is ignored):
//
//   Shape   ::= Subtree ";"
//   Subtree ::= Leaf | "(" Subtree "," Subtree ")" Label? Length?
//   Leaf    ::= Label? Length?
//   Label   ::= [A-Za-z0-9_.-]+
//   Length  ::= ":" decimal
//
// Labels and branch lengths are accepted and discarded. Output never
// carries labels or lengths and lists children in canonical order, so a
// single leaf is emitted as ";" and the four-leaf balanced shape as
// "((,),(,));".

#ifndef TREEBAL_NEWICK_HPP_
#define TREEBAL_NEWICK_HPP_

#include <string>
#include <string_view>

#include "treebal/errors.hpp"
#include "treebal/tree_shape.hpp"

namespace treebal {

// Throws NewickError on malformed input.
TreeShape parse_newick(std::string_view text);

std::string to_newick(const TreeShape& shape);

}  // namespace treebal

#endif  // TREEBAL_NEWICK_HPP_
