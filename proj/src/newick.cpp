#include "treebal/newick.hpp"

#include <cctype>
#include <optional>
#include <variant>
#include <vector>

namespace treebal {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TreeShape parse() {
    skip_ws();
    if (at_end()) throw NewickError("empty input", pos_);
    TreeShape shape = parse_subtree();
    skip_ws();
    if (at_end()) throw NewickError("missing ';' terminator", pos_);
    if (peek() != ';') {
      throw NewickError(std::string("unexpected character '") + peek() + "'",
                        pos_);
    }
    ++pos_;
    skip_ws();
    if (!at_end()) throw NewickError("trailing characters after ';'", pos_);
    return shape;
  }

 private:
  struct Frame {
    std::size_t open_offset;
    std::vector<TreeShape> children;
  };

  // Iterative so that deeply nested input cannot exhaust the call stack.
  TreeShape parse_subtree() {
    std::vector<Frame> stack;
    for (;;) {
      skip_ws();
      if (!at_end() && peek() == '(') {
        stack.push_back({pos_, {}});
        ++pos_;
        continue;
      }
      TreeShape value;
      skip_annotation();
      for (;;) {
        if (stack.empty()) return value;
        Frame& top = stack.back();
        top.children.push_back(std::move(value));
        skip_ws();
        if (at_end()) {
          throw NewickError("unbalanced parentheses: '(' opened at offset " +
                                std::to_string(top.open_offset) +
                                " is never closed",
                            pos_);
        }
        const char c = peek();
        if (c == ',') {
          if (top.children.size() >= 2) {
            throw NewickError("node has more than two children", pos_);
          }
          ++pos_;
          break;
        }
        if (c == ')') {
          if (top.children.size() != 2) {
            throw NewickError("node has " +
                                  std::to_string(top.children.size()) +
                                  " child(ren), expected 2",
                              pos_);
          }
          ++pos_;
          value = TreeShape::internal(std::move(top.children[0]),
                                      std::move(top.children[1]));
          stack.pop_back();
          skip_annotation();
          continue;
        }
        if (c == ';') {
          throw NewickError("unbalanced parentheses: '(' opened at offset " +
                                std::to_string(top.open_offset) +
                                " is never closed",
                            pos_);
        }
        throw NewickError(std::string("expected ',' or ')' but found '") + c +
                              "'",
                          pos_);
      }
    }
  }

  // Optional label followed by an optional ":length".
  void skip_annotation() {
    skip_ws();
    while (!at_end() && is_label_char(peek())) ++pos_;
    skip_ws();
    if (at_end() || peek() != ':') return;
    const std::size_t colon = pos_;
    ++pos_;
    skip_ws();
    bool digits = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
    while (!at_end()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = true;
      } else if (c == '.' || c == 'e' || c == 'E' ||
                 ((c == '+' || c == '-') &&
                  (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))) {
      } else {
        break;
      }
      ++pos_;
    }
    if (!digits) throw NewickError("branch length without digits", colon);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void emit(const TreeShape& shape, std::string& out) {
  // Each entry is a subtree to print or a literal character.
  std::vector<std::variant<TreeShape, char>> todo{shape};
  while (!todo.empty()) {
    auto item = std::move(todo.back());
    todo.pop_back();
    if (const char* c = std::get_if<char>(&item)) {
      out.push_back(*c);
      continue;
    }
    const TreeShape& t = std::get<TreeShape>(item);
    if (t.is_leaf()) continue;
    out.push_back('(');
    todo.emplace_back(')');
    todo.emplace_back(t.right());
    todo.emplace_back(',');
    todo.emplace_back(t.left());
  }
}

}  // namespace

TreeShape parse_newick(std::string_view text) { return Parser(text).parse(); }

std::string to_newick(const TreeShape& shape) {
  std::string out;
  out.reserve(3 * std::size_t{shape.leaf_count()});
  emit(canonicalize(shape), out);
  out.push_back(';');
  return out;
}

}  // namespace treebal
